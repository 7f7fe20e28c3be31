#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hconv {

using Complex = std::complex<double>;

namespace tol {
inline constexpr double zero = 1e-12;        // magnitude below which a coefficient counts as zero
inline constexpr double root_residual = 1e-8; // |p(root)| <= root_residual * max|coeff|
inline constexpr double boundary = 1e-7;      // dead band around |z| = 1 for zero counting
inline constexpr double determinant = 1e-12;  // positivity threshold for Schur-Cohn minors
inline constexpr double eval_radius = 0.999;  // default evaluation cap inside the disk
} // namespace tol

inline bool is_finite(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline void require_finite(Complex v, const char* where) {
    if (!is_finite(v)) throw Error(std::string(where) + ": non-finite complex value");
}

// Truncated power series: coeffs[k] is the z^k coefficient, fixed truncation
// order N = coeffs.size() >= 2. Values are immutable by convention; the few
// builders that fill coefficients in place do so before handing the series out.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : c_(order) {
        if (order < 2) throw Error("PowerSeries: order must be >= 2");
    }

    explicit PowerSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
        if (c_.size() < 2) throw Error("PowerSeries: order must be >= 2");
        for (Complex v : c_) require_finite(v, "PowerSeries");
    }

    std::size_t order() const { return c_.size(); }

    Complex operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Complex{}; }

    Complex& at(std::size_t k) { return c_.at(k); }

    const std::vector<Complex>& coeffs() const { return c_; }

    // Copy truncated or zero-padded to a new order.
    PowerSeries resized(std::size_t order) const {
        std::vector<Complex> out(order);
        for (std::size_t k = 0; k < order && k < c_.size(); ++k) out[k] = c_[k];
        return PowerSeries(std::move(out));
    }

private:
    std::vector<Complex> c_;
};

namespace detail {
inline void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.order() != b.order())
        throw Error(std::string(op) + ": truncation orders differ");
}
} // namespace detail

inline PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "add");
    std::vector<Complex> out(a.order());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
    return PowerSeries(std::move(out));
}

inline PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "sub");
    std::vector<Complex> out(a.order());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
    return PowerSeries(std::move(out));
}

inline PowerSeries scale(const PowerSeries& a, Complex s) {
    require_finite(s, "scale");
    std::vector<Complex> out(a.order());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = s * a[k];
    return PowerSeries(std::move(out));
}

// Cauchy product truncated to the common order.
inline PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "mul");
    std::vector<Complex> out(a.order());
    for (std::size_t k = 0; k < out.size(); ++k) {
        Complex s{};
        for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
        out[k] = s;
    }
    return PowerSeries(std::move(out));
}

// Long division; requires |b0| > tol::zero (callers factor out powers of z themselves).
inline PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
    detail::require_same_order(a, b, "div");
    if (std::abs(b[0]) <= tol::zero)
        throw DivisionBySingular("div: divisor has (near-)zero constant term");
    std::vector<Complex> out(a.order());
    for (std::size_t k = 0; k < out.size(); ++k) {
        Complex s = a[k];
        for (std::size_t j = 1; j <= k; ++j) s -= b[j] * out[k - j];
        out[k] = s / b[0];
    }
    return PowerSeries(std::move(out));
}

// Term-wise derivative. keep_order pads a trailing zero so the result keeps N
// coefficients; otherwise the order drops by one.
inline PowerSeries derivative(const PowerSeries& a, bool keep_order = false) {
    std::vector<Complex> out(keep_order ? a.order() : a.order() - 1);
    for (std::size_t k = 0; k + 1 < a.order(); ++k) out[k] = double(k + 1) * a[k + 1];
    return PowerSeries(std::move(out));
}

// Term-wise antiderivative with zero constant; order grows by one.
inline PowerSeries antiderivative(const PowerSeries& a) {
    std::vector<Complex> out(a.order() + 1);
    for (std::size_t k = 0; k < a.order(); ++k) out[k + 1] = a[k] / double(k + 1);
    return PowerSeries(std::move(out));
}

// Multiply by z (shift up one index) at fixed order; the top coefficient falls off.
inline PowerSeries shift_up(const PowerSeries& a) {
    std::vector<Complex> out(a.order());
    for (std::size_t k = 0; k + 1 < a.order(); ++k) out[k + 1] = a[k];
    return PowerSeries(std::move(out));
}

// Horner evaluation. Truncation error is unbounded past r_max, hence the guard.
inline Complex eval(const PowerSeries& a, Complex z, double r_max = tol::eval_radius) {
    require_finite(z, "eval");
    if (std::abs(z) > r_max * (1.0 + 1e-12))
        throw EvalOutsideDisk("eval: |z| exceeds r_max");
    Complex acc{};
    for (std::size_t k = a.order(); k-- > 0;) acc = acc * z + a[k];
    require_finite(acc, "eval result");
    return acc;
}

} // namespace hconv
