#pragma once

#include <cmath>
#include <cstddef>

#include "harmonic.hpp"
#include "polynomial.hpp"

namespace hconv {

/// Hadamard product f*F: coefficient-wise products of the analytic parts.
inline HarmonicMap convolve(const HarmonicMap& f, const HarmonicMap& F) {
    detail::require_same_order(f.h(), F.h(), "convolve");
    detail::require_same_order(f.g(), F.g(), "convolve");
    const std::size_t n = f.h().order();
    PowerSeries h(n), g(n);
    for (std::size_t k = 0; k < n; ++k) {
        h.at(k) = f.h()[k] * F.h()[k];
        g.at(k) = f.g()[k] * F.g()[k];
    }
    return HarmonicMap(std::move(h), std::move(g));
}

/// Convolution with the canonical map, using the identity
/// h0*H = (H + zH')/2, g0*G = (G - zG')/2 instead of coefficient products.
inline HarmonicMap convolve_f0(const HarmonicMap& F) {
    const PowerSeries zHp = shift_up(derivative(F.h(), true));
    const PowerSeries zGp = shift_up(derivative(F.g(), true));
    return HarmonicMap(scale(add(F.h(), zHp), 0.5), scale(sub(F.g(), zGp), 0.5));
}

// --- dilatation of a convolution with the canonical map ----------------------

/// omega~ = prefactor * z^power * num/den with den the reciprocal adjoint of
/// num, so |omega~| = |z|^power on |z| = 1 whenever |prefactor| = 1.
struct RationalDilatation {
    Complex prefactor;
    int power = 0;
    Polynomial num;
    Polynomial den;

    Complex eval(Complex z) const {
        require_finite(z, "RationalDilatation::eval");
        const Complex d = hconv::eval(den, z);
        if (std::abs(d) <= tol::zero * std::max(1.0, max_coeff_modulus(den)))
            throw DenominatorVanishes("RationalDilatation: denominator vanishes at sample point");
        Complex zp = 1.0;
        for (int i = 0; i < power; ++i) zp *= z;
        return prefactor * zp * hconv::eval(num, z) / d;
    }
};

inline PowerSeries to_series(const RationalDilatation& rd, std::size_t order) {
    std::vector<Complex> nc(order, Complex{}), dc(order, Complex{});
    for (std::size_t k = 0; k < order && k <= rd.num.degree(); ++k) nc[k] = rd.num[k];
    for (std::size_t k = 0; k < order && k <= rd.den.degree(); ++k) dc[k] = rd.den[k];
    PowerSeries q = div(PowerSeries(std::move(nc)), PowerSeries(std::move(dc)));
    for (int i = 0; i < rd.power; ++i) q = shift_up(q);
    return scale(q, rd.prefactor);
}

/// Dilatation of f0 * f from the truncated series alone:
/// omega~ = -z g'' / (2h' + z h''). Independent of the target that produced f.
inline PowerSeries omega_tilde_general(const HarmonicMap& f) {
    if (f.h().order() < 4)
        throw BadParameter("omega_tilde_general: order too small");
    const std::size_t m = f.h().order() - 2;
    const PowerSeries hp = derivative(f.h());
    const PowerSeries hpp = derivative(hp);
    const PowerSeries gpp = derivative(derivative(f.g()));

    const PowerSeries num = scale(shift_up(gpp), -1.0);
    const PowerSeries den = add(scale(hp.resized(m), 2.0), shift_up(hpp.resized(m)));
    if (std::abs(den[0]) <= tol::zero)
        throw DenominatorVanishes("omega_tilde_general: 2h'(0) vanishes");
    return div(num, den);
}

/// Closed form of omega~ for half-plane shears. Monomial omega = e^{i theta} z^n:
///   omega~ = -e^{2i theta} z^n (z^{n+1} + (1 - n/2)e^{-i theta} z + (n/2)e^{-i theta}) / den.
/// Mobius omega = (z+a)/(1+az):
///   omega~ = -z (z^2 + (1+3a)/2 z + (1+a)/2) / den.
inline RationalDilatation omega_tilde_halfplane(const Dilatation& w) {
    if (auto* m = w.as_monomial()) {
        const Complex e = std::polar(1.0, -m->theta);
        const int n = m->n;
        std::vector<Complex> num(std::size_t(n) + 2, Complex{});
        num[0] = 0.5 * double(n) * e;
        num[1] += (1.0 - 0.5 * double(n)) * e;
        num[std::size_t(n) + 1] += 1.0;
        Polynomial p(num);
        Polynomial q = reciprocal_adjoint(p);
        return RationalDilatation{-std::polar(1.0, 2.0 * m->theta), n, std::move(p), std::move(q)};
    }
    if (auto* mb = w.as_mobius()) {
        const double a = mb->a;
        Polynomial p({Complex(0.5 * (1.0 + a)), Complex(0.5 * (1.0 + 3.0 * a)), Complex(1.0)});
        Polynomial q = reciprocal_adjoint(p);
        return RationalDilatation{Complex(-1.0), 1, std::move(p), std::move(q)};
    }
    throw UnsupportedVariant("omega_tilde_halfplane: closed form needs a monomial or Mobius dilatation");
}

/// Closed form of omega~ for strip shears, x = cos(alpha). Monomial case:
///   omega~ = e^{2i theta} z^n (z^{n+2} + x z^{n+1} + (1-n/2)e^{-i theta} z^2
///            + (1-n)x e^{-i theta} z - (n/2)e^{-i theta}) / den,
/// with the z^2 terms merging when n = 1. At n = 2 the quotient collapses and
/// omega~ = -e^{i theta} z^2 independently of alpha. Mobius case:
///   omega~ = z (z^3 + (1/2 + 3a/2 + x) z^2 + (a + 2ax) z + (ax + a/2 - 1/2)) / den.
inline RationalDilatation omega_tilde_strip(const Dilatation& w, double alpha) {
    if (!(alpha >= std::numbers::pi / 2 && alpha < std::numbers::pi))
        throw BadAlpha("omega_tilde_strip: alpha must lie in [pi/2, pi)");
    const double x = std::cos(alpha);
    if (auto* m = w.as_monomial()) {
        const int n = m->n;
        if (n == 2)
            return RationalDilatation{-std::polar(1.0, m->theta), 2, Polynomial({Complex(1.0)}),
                                      Polynomial({Complex(1.0)})};
        const Complex e = std::polar(1.0, -m->theta);
        std::vector<Complex> num(std::size_t(n) + 3, Complex{});
        num[std::size_t(n) + 2] += 1.0;
        num[std::size_t(n) + 1] += x;
        num[2] += (1.0 - 0.5 * double(n)) * e;
        num[1] += (1.0 - double(n)) * x * e;
        num[0] += -0.5 * double(n) * e;
        Polynomial p(num);
        Polynomial q = reciprocal_adjoint(p);
        return RationalDilatation{std::polar(1.0, 2.0 * m->theta), n, std::move(p), std::move(q)};
    }
    if (auto* mb = w.as_mobius()) {
        const double a = mb->a;
        Polynomial p({Complex(a * x + 0.5 * a - 0.5), Complex(a + 2.0 * a * x),
                      Complex(0.5 + 1.5 * a + x), Complex(1.0)});
        Polynomial q = reciprocal_adjoint(p);
        return RationalDilatation{Complex(1.0), 1, std::move(p), std::move(q)};
    }
    throw UnsupportedVariant("omega_tilde_strip: closed form needs a monomial or Mobius dilatation");
}

} // namespace hconv
