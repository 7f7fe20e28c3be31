#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "polynomial.hpp"

namespace hconv {

struct RootOracleOptions {
    int max_iter = 500;
    double residual_tol = tol::root_residual; // |p(root)| <= residual_tol * max|coeff|
};

/// Durand-Kerner simultaneous iteration. Deterministic: iterates start on the
/// circle of radius 1 + max|a_k/a_n| at angles 2*pi*k/n + 0.4, so repeated runs
/// (and runs across platforms with the same libm) agree bit-for-bit on the
/// fixture inputs. Returns all n roots with multiplicity, sorted by (re, im).
/// Throws NoConvergence when the residual target is still unmet after max_iter.
inline std::vector<Complex> poly_roots_oracle(const Polynomial& p,
                                              RootOracleOptions opts = {}) {
    const std::size_t n = p.degree();
    if (n == 0 || std::abs(p.leading()) <= tol::zero)
        throw Error("poly_roots_oracle: degree >= 1 with nonzero leading coefficient required");

    const double coeff_scale = max_coeff_modulus(p);

    // Monic copy keeps the Weierstrass correction well scaled.
    std::vector<Complex> m(p.coeffs().size());
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = p[k] / p.leading();

    auto eval_monic = [&](Complex z) {
        Complex acc{};
        for (std::size_t k = m.size(); k-- > 0;) acc = acc * z + m[k];
        return acc;
    };

    if (n == 1) return {-m[0]};

    double seed_radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) seed_radius = std::max(seed_radius, std::abs(m[k]));
    seed_radius += 1.0;

    std::vector<Complex> zs(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * double(k) / double(n) + 0.4;
        zs[k] = seed_radius * Complex(std::cos(ang), std::sin(ang));
    }

    auto residual_ok = [&] {
        for (Complex z : zs)
            if (std::abs(eval(p, z)) > opts.residual_tol * coeff_scale) return false;
        return true;
    };

    for (int it = 0; it < opts.max_iter; ++it) {
        for (std::size_t k = 0; k < n; ++k) {
            Complex denom{1.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex d = zs[k] - zs[j];
                // Coincident iterates stall the correction; nudge deterministically.
                if (std::abs(d) < 1e-300) d = Complex(1e-12 * (double(k) + 1.0), 1e-12);
                denom *= d;
            }
            zs[k] -= eval_monic(zs[k]) / denom;
        }
        if (residual_ok()) break;
    }

    if (!residual_ok())
        throw NoConvergence("poly_roots_oracle: residual target unmet after max_iter");

    std::sort(zs.begin(), zs.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return zs;
}

} // namespace hconv
