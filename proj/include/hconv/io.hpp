#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "certify.hpp"
#include "harmonic.hpp"

namespace hconv {

namespace detail {

inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

// --- coefficient dumps --------------------------------------------------------

/// Plain-text dump, one `k re im` line per coefficient: a `# map <name>
/// order <N>` header and one `# part h` / `# part g` marker per part.
/// 17 significant digits round-trip doubles exactly.
inline std::string dump_coefficients(const HarmonicMap& f, const std::string& name) {
    std::string out = "# map " + name + " order " + std::to_string(f.h().order()) + "\n";
    auto part = [&out](const PowerSeries& s, const char* tag) {
        out += "# part ";
        out += tag;
        out += '\n';
        for (std::size_t k = 0; k < s.order(); ++k)
            out += std::to_string(k) + " " + detail::fmt17(s[k].real()) + " " +
                   detail::fmt17(s[k].imag()) + "\n";
    };
    part(f.h(), "h");
    part(f.g(), "g");
    return out;
}

inline HarmonicMap parse_coefficients(const std::string& text, std::string* name_out = nullptr) {
    std::istringstream in(text);
    std::string line;
    std::size_t order = 0;
    std::vector<Complex> h, g;
    std::vector<Complex>* cur = nullptr;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line);
            std::string hash, word;
            ls >> hash >> word;
            if (word == "map") {
                std::string name, kw;
                ls >> name >> kw >> order;
                if (kw != "order" || order < 2) throw IoError("coefficient dump: bad header");
                if (name_out) *name_out = name;
            } else if (word == "part") {
                std::string tag;
                ls >> tag;
                if (tag == "h") cur = &h;
                else if (tag == "g") cur = &g;
                else throw IoError("coefficient dump: unknown part marker");
            }
            continue;
        }
        if (!cur) throw IoError("coefficient dump: data before part marker");
        std::istringstream ls(line);
        std::size_t k;
        double re, im;
        if (!(ls >> k >> re >> im) || k != cur->size())
            throw IoError("coefficient dump: malformed line '" + line + "'");
        cur->emplace_back(re, im);
    }
    if (order == 0) throw IoError("coefficient dump: missing header");
    if (h.size() != order || g.size() != order)
        throw IoError("coefficient dump: part length does not match declared order");
    return HarmonicMap(PowerSeries(std::move(h)), PowerSeries(std::move(g)));
}

// --- files ---------------------------------------------------------------------

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- CSV reports -----------------------------------------------------------------

inline std::string report_csv_header() {
    return "claim,extremum,witness_re,witness_im,passed\n";
}

inline std::string report_csv_row(const CertificationReport& r) {
    std::string claim = r.claim;
    for (char& c : claim)
        if (c == ',') c = ';';
    return claim + "," + detail::fmt17(r.max_modulus) + "," + detail::fmt17(r.witness.real()) +
           "," + detail::fmt17(r.witness.imag()) + "," + (r.passed ? "true" : "false") + "\n";
}

inline std::string report_csv(const std::vector<CertificationReport>& reports) {
    std::string out = report_csv_header();
    for (const auto& r : reports) out += report_csv_row(r);
    return out;
}

// --- key = value config ------------------------------------------------------------

/// Lines of `key = value`; blank lines and # comments ignored. Whitespace
/// around keys and values is trimmed.
inline std::map<std::string, std::string> parse_config(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    auto trim = [](std::string s) {
        const char* ws = " \t\r";
        const auto a = s.find_first_not_of(ws);
        if (a == std::string::npos) return std::string();
        const auto b = s.find_last_not_of(ws);
        return s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw IoError("config: line without '=': " + line);
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) throw IoError("config: empty key: " + line);
        out[key] = trim(t.substr(eq + 1));
    }
    return out;
}

} // namespace hconv
