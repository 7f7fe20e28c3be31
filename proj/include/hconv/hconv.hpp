#pragma once

// Umbrella header: shear construction of harmonic maps, Hadamard
// convolutions, dilatation certification, polynomial zero location, and the
// figure renderer. Everything lives in namespace hconv; the CLI front end is
// a separate include (cli.hpp) so the library proper has no CLI11 dependency.

#include "certify.hpp"
#include "convolution.hpp"
#include "errors.hpp"
#include "examples.hpp"
#include "harmonic.hpp"
#include "io.hpp"
#include "polynomial.hpp"
#include "render.hpp"
#include "roots.hpp"
#include "series.hpp"
#include "zerocheck.hpp"
