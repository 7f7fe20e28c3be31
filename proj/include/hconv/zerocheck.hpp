#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "polynomial.hpp"
#include "roots.hpp"

namespace hconv {

// --- Cohn's rule ------------------------------------------------------------

struct CohnStep {
    Polynomial input;
    Polynomial reduced;
    bool applicable = false;
};

/// One reduction f1 = (conj(an) f - a0 f*)/z, valid when |a0| < |an|; then f1
/// has exactly one zero fewer inside the unit disk and f has none on the
/// circle. Inapplicable (without throwing) when |a0| >= |an| or too close to
/// call.
inline CohnStep cohn_reduce(const Polynomial& f) {
    CohnStep step{f, f, false};
    const std::size_t n = f.degree();
    if (n == 0) return step;
    const Complex a0 = f[0];
    const Complex an = f.leading();
    const double lo = std::abs(a0), hi = std::abs(an);
    if (!(lo < hi) || hi - lo <= tol::zero * std::max(1.0, hi)) return step;

    const Polynomial fs = reciprocal_adjoint(f);
    // Constant term of conj(an) f - a0 f* cancels exactly; divide by z.
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = std::conj(an) * f[k + 1] - a0 * fs[k + 1];
    step.reduced = Polynomial(std::move(out));
    step.applicable = true;
    return step;
}

struct ZeroCountOptions {
    // When set, a fallback root within tol::boundary of |z| = 1 throws
    // BoundaryAmbiguous instead of being counted by its side.
    bool strict_boundary = true;
    RootOracleOptions oracle{};
};

/// Number of zeros of f in the open unit disk. Chains Cohn reductions while
/// they apply (each step is one interior zero); if the chain reaches degree 0
/// the count is the number of steps. Otherwise the remaining factor goes to
/// the root oracle.
inline int count_zeros_in_disk(const Polynomial& f, const ZeroCountOptions& opts = {}) {
    if (f.is_zero()) throw BadParameter("count_zeros_in_disk: zero polynomial");
    Polynomial cur = f;
    int steps = 0;
    while (cur.degree() >= 1) {
        const CohnStep s = cohn_reduce(cur);
        if (!s.applicable || s.reduced.is_zero()) break;
        ++steps;
        cur = s.reduced;
    }
    if (cur.degree() == 0) return steps;

    int inside = 0;
    for (Complex r : poly_roots_oracle(cur, opts.oracle)) {
        const double m = std::abs(r);
        if (opts.strict_boundary && std::abs(m - 1.0) <= tol::boundary)
            throw BoundaryAmbiguous("count_zeros_in_disk: root within tolerance of |z| = 1");
        if (m < 1.0) ++inside;
    }
    return steps + inside;
}

// --- Schur-Cohn determinants --------------------------------------------------

namespace detail {

// Determinant by LU with partial pivoting; dim x dim dense, row-major.
inline Complex lu_determinant(std::vector<Complex> m, std::size_t dim) {
    Complex det = 1.0;
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = col;
        double best = std::abs(m[col * dim + col]);
        for (std::size_t r = col + 1; r < dim; ++r) {
            const double v = std::abs(m[r * dim + col]);
            if (v > best) { best = v; piv = r; }
        }
        if (best < 1e-14)
            throw IllConditioned("schur_cohn: pivot below 1e-14");
        if (piv != col) {
            for (std::size_t c = 0; c < dim; ++c) std::swap(m[piv * dim + c], m[col * dim + c]);
            det = -det;
        }
        const Complex d = m[col * dim + col];
        det *= d;
        for (std::size_t r = col + 1; r < dim; ++r) {
            const Complex factor = m[r * dim + col] / d;
            if (factor == Complex{}) continue;
            for (std::size_t c = col; c < dim; ++c) m[r * dim + c] -= factor * m[col * dim + c];
        }
    }
    return det;
}

} // namespace detail

struct SchurCohnReport {
    std::vector<double> minors; // M_1 .. M_n
    bool all_inside = false;    // every minor exceeds tol::determinant
};

/// Schur-Cohn minors M_nu = det [[B*, A], [A*, B]] built from the upper
/// triangular Toeplitz blocks A_ij = a_{j-i}, B_ij = conj(a_{n-(j-i)}),
/// nu = 1..n. All zeros lie inside the open disk iff every M_nu > 0.
inline SchurCohnReport schur_cohn(const Polynomial& f) {
    const std::size_t n = f.degree();
    if (n == 0) throw BadParameter("schur_cohn: constant polynomial");
    SchurCohnReport rep;
    rep.minors.reserve(n);
    for (std::size_t nu = 1; nu <= n; ++nu) {
        const std::size_t dim = 2 * nu;
        std::vector<Complex> m(dim * dim, Complex{});
        for (std::size_t i = 0; i < nu; ++i) {
            for (std::size_t j = 0; j < nu; ++j) {
                if (i >= j) {
                    m[i * dim + j] = f[n - (i - j)];                      // B* block
                    m[(nu + i) * dim + j] = std::conj(f[i - j]);          // A* block
                }
                if (j >= i) {
                    m[i * dim + (nu + j)] = f[j - i];                     // A block
                    m[(nu + i) * dim + (nu + j)] = std::conj(f[n - (j - i)]); // B block
                }
            }
        }
        const Complex det = detail::lu_determinant(std::move(m), dim);
        if (std::abs(det.imag()) > 1e-9 * std::max(1.0, std::abs(det)))
            throw IllConditioned("schur_cohn: minor has a non-negligible imaginary part");
        rep.minors.push_back(det.real());
    }
    rep.all_inside = std::all_of(rep.minors.begin(), rep.minors.end(),
                                 [](double v) { return v > tol::determinant; });
    return rep;
}

} // namespace hconv
