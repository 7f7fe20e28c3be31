#include "hconv/cli.hpp"

int main(int argc, char** argv) { return hconv::run_cli(argc, argv); }
