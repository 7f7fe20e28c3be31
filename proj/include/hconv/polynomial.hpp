#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "series.hpp"

namespace hconv {

// Dense polynomial with ascending coefficients a0..an. Trailing coefficients
// of magnitude <= tol::zero are trimmed on construction so degree() is honest;
// the all-zero input degenerates to the zero constant.
class Polynomial {
public:
    explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("Polynomial: empty coefficient list");
        for (Complex v : c_) require_finite(v, "Polynomial");
        while (c_.size() > 1 && std::abs(c_.back()) <= tol::zero) c_.pop_back();
    }

    std::size_t degree() const { return c_.size() - 1; }

    Complex operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Complex{}; }

    Complex leading() const { return c_.back(); }

    const std::vector<Complex>& coeffs() const { return c_; }

    bool is_zero() const { return c_.size() == 1 && std::abs(c_[0]) <= tol::zero; }

private:
    std::vector<Complex> c_;
};

inline Complex eval(const Polynomial& p, Complex z) {
    require_finite(z, "eval(poly)");
    Complex acc{};
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * z + p[k];
    return acc;
}

// f*(z) = z^n conj(f(1/conj z)): coefficients reversed and conjugated.
// Zeros invert through the unit circle; (f*)* = f when a0 != 0.
inline Polynomial reciprocal_adjoint(const Polynomial& f) {
    std::vector<Complex> out(f.coeffs().size());
    const std::size_t n = f.degree();
    for (std::size_t k = 0; k <= n; ++k) out[k] = std::conj(f[n - k]);
    return Polynomial(std::move(out));
}

inline double max_coeff_modulus(const Polynomial& p) {
    double m = 0.0;
    for (Complex c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

} // namespace hconv
