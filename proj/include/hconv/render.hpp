#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "harmonic.hpp"

namespace hconv {

struct RenderSpec {
    std::vector<double> circle_radii;    // each in (0,1)
    std::size_t rays = 0;                // radial spokes from the origin
    std::size_t samples_per_circle = 256; // >= 64
    double r_max = tol::eval_radius;
};

namespace detail {

inline void fmt_fixed(std::string& out, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    out += buf;
}

} // namespace detail

/// Images of concentric circles (and optional rays) as an SVG document.
/// Sampling order and number formatting are fixed, so identical inputs give
/// byte-identical output. The viewport is the 5%-padded bounding box of the
/// sampled points, with the imaginary axis pointing up.
inline std::string render_svg(const HarmonicMap& f, const RenderSpec& spec) {
    if (spec.circle_radii.empty())
        throw BadParameter("render_svg: no circles requested");
    if (spec.samples_per_circle < 64)
        throw BadParameter("render_svg: samples_per_circle >= 64 required");
    for (double r : spec.circle_radii) {
        if (r >= 1.0) throw EvalOutsideDisk("render_svg: circle radius >= 1");
        if (!(r > 0.0)) throw BadParameter("render_svg: circle radius must be positive");
    }

    const std::size_t n = spec.samples_per_circle;
    std::vector<std::vector<Complex>> polylines;

    for (double r : spec.circle_radii) {
        std::vector<Complex> pts;
        pts.reserve(n + 1);
        for (std::size_t j = 0; j < n; ++j) {
            const double t = 2.0 * std::numbers::pi * double(j) / double(n);
            pts.push_back(eval_map(f, r * Complex(std::cos(t), std::sin(t)), spec.r_max));
        }
        pts.push_back(pts.front()); // close the curve exactly
        polylines.push_back(std::move(pts));
    }

    const std::size_t n_circles = polylines.size();
    if (spec.rays > 0) {
        const double r_out = *std::max_element(spec.circle_radii.begin(), spec.circle_radii.end());
        for (std::size_t k = 0; k < spec.rays; ++k) {
            const double t = 2.0 * std::numbers::pi * double(k) / double(spec.rays);
            const Complex dir(std::cos(t), std::sin(t));
            std::vector<Complex> pts;
            pts.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                pts.push_back(eval_map(f, r_out * double(i) / double(n - 1) * dir, spec.r_max));
            polylines.push_back(std::move(pts));
        }
    }

    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& line : polylines)
        for (Complex w : line) {
            x0 = std::min(x0, w.real()); x1 = std::max(x1, w.real());
            y0 = std::min(y0, -w.imag()); y1 = std::max(y1, -w.imag());
        }
    const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-9});
    const double vw = x1 - x0 + 2 * pad, vh = y1 - y0 + 2 * pad;
    const double stroke = 0.003 * std::max(vw, vh);

    std::string svg;
    svg.reserve(64 * polylines.size() * n);
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    detail::fmt_fixed(svg, x0 - pad); svg += ' ';
    detail::fmt_fixed(svg, y0 - pad); svg += ' ';
    detail::fmt_fixed(svg, vw); svg += ' ';
    detail::fmt_fixed(svg, vh);
    svg += "\" width=\"640\" height=\"640\">\n";

    auto emit_group = [&](std::size_t from, std::size_t to, const char* color) {
        if (from >= to) return;
        svg += "<g fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"";
        detail::fmt_fixed(svg, stroke);
        svg += "\" stroke-linejoin=\"round\">\n";
        for (std::size_t i = from; i < to; ++i) {
            svg += "<polyline points=\"";
            bool first = true;
            for (Complex w : polylines[i]) {
                if (!first) svg += ' ';
                first = false;
                detail::fmt_fixed(svg, w.real());
                svg += ',';
                detail::fmt_fixed(svg, -w.imag());
            }
            svg += "\"/>\n";
        }
        svg += "</g>\n";
    };

    emit_group(0, n_circles, "#2a6fb0");
    emit_group(n_circles, polylines.size(), "#b03a2e");
    svg += "</svg>\n";
    return svg;
}

} // namespace hconv
