#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "series.hpp"

namespace hconv {

// --- target domains -------------------------------------------------------

enum class TargetKind { right_half_plane, slanted_half_plane, vertical_strip };

// Right half-plane {Re w > -1/2}, slanted half-plane {Re(e^{i gamma} w) > -1/2},
// or the vertical strip reached through (1/2i sin a) log((1+z e^{ia})/(1+z e^{-ia})).
class TargetDomain {
public:
    static TargetDomain right_half_plane() { return TargetDomain(TargetKind::right_half_plane, 0.0); }

    static TargetDomain slanted_half_plane(double gamma) {
        if (!(gamma >= 0.0 && gamma < 2.0 * std::numbers::pi))
            throw BadParameter("slanted_half_plane: gamma must lie in [0, 2pi)");
        return TargetDomain(TargetKind::slanted_half_plane, gamma);
    }

    static TargetDomain vertical_strip(double alpha) {
        if (!(alpha >= std::numbers::pi / 2 && alpha < std::numbers::pi))
            throw BadAlpha("vertical_strip: alpha must lie in [pi/2, pi)");
        return TargetDomain(TargetKind::vertical_strip, alpha);
    }

    TargetKind kind() const { return kind_; }
    double gamma() const { return kind_ == TargetKind::slanted_half_plane ? param_ : 0.0; }
    double alpha() const { return param_; }

private:
    TargetDomain(TargetKind k, double p) : kind_(k), param_(p) {}
    TargetKind kind_;
    double param_;
};

// --- dilatations -----------------------------------------------------------

struct MonomialUnimodular {
    double theta;
    int n;
};

struct MobiusDilatation {
    double a;
};

// omega = g'/h', the local-univalence certificate: |omega| < 1 on the disk.
// The series variant is admitted only after a sampled sup|omega| < 1 check.
class Dilatation {
public:
    static Dilatation monomial(double theta, int n) {
        if (n < 1) throw BadParameter("Dilatation::monomial: n must be >= 1");
        return Dilatation(MonomialUnimodular{theta, n});
    }

    static Dilatation mobius(double a) {
        if (!(a > -1.0 && a < 1.0)) throw BadParameter("Dilatation::mobius: a must lie in (-1,1)");
        return Dilatation(MobiusDilatation{a});
    }

    static Dilatation series(PowerSeries w) {
        for (int i = 1; i <= 19; ++i) {
            const double r = 0.05 * i; // up to 0.95
            for (int j = 0; j < 64; ++j) {
                const double ang = 2.0 * std::numbers::pi * j / 64.0;
                const Complex z = r * Complex(std::cos(ang), std::sin(ang));
                if (!(std::abs(hconv::eval(w, z)) < 1.0))
                    throw BadParameter("Dilatation::series: sampled sup|omega| reaches 1");
            }
        }
        return Dilatation(std::move(w));
    }

    const MonomialUnimodular* as_monomial() const { return std::get_if<MonomialUnimodular>(&v_); }
    const MobiusDilatation* as_mobius() const { return std::get_if<MobiusDilatation>(&v_); }
    const PowerSeries* as_series() const { return std::get_if<PowerSeries>(&v_); }

    PowerSeries to_series(std::size_t order) const {
        if (auto* m = as_monomial()) {
            PowerSeries out(order);
            if (std::size_t(m->n) < order)
                out.at(m->n) = std::polar(1.0, m->theta);
            return out;
        }
        if (auto* mb = as_mobius()) {
            // (z+a)/(1+az) = a + (1-a^2) z sum_k (-a z)^k
            PowerSeries out(order);
            out.at(0) = mb->a;
            double pw = 1.0 - mb->a * mb->a;
            for (std::size_t k = 1; k < order; ++k) {
                out.at(k) = pw;
                pw *= -mb->a;
            }
            return out;
        }
        return as_series()->resized(order);
    }

    Complex eval(Complex z) const {
        if (auto* m = as_monomial()) return std::polar(1.0, m->theta) * std::pow(z, m->n);
        if (auto* mb = as_mobius()) return (z + mb->a) / (1.0 + mb->a * z);
        return hconv::eval(*as_series(), z);
    }

    Complex eval_derivative(Complex z) const {
        if (auto* m = as_monomial())
            return std::polar(1.0, m->theta) * double(m->n) * std::pow(z, m->n - 1);
        if (auto* mb = as_mobius()) {
            const Complex d = 1.0 + mb->a * z;
            return (1.0 - mb->a * mb->a) / (d * d);
        }
        return hconv::eval(derivative(*as_series()), z);
    }

private:
    explicit Dilatation(std::variant<MonomialUnimodular, MobiusDilatation, PowerSeries> v)
        : v_(std::move(v)) {}
    std::variant<MonomialUnimodular, MobiusDilatation, PowerSeries> v_;
};

// --- harmonic maps ---------------------------------------------------------

// Optional high-accuracy evaluators for the named maps; series truncation is
// useless near |z| = 1 where the figures and slit claims live.
struct ClosedForm {
    std::string name;
    std::function<Complex(Complex)> h;
    std::function<Complex(Complex)> g;
};

// f = h + conj(g), h(0) = g(0) = 0. Sense preservation (|g'| < |h'|) is a
// property of the construction, checked by the test grids, not the container.
class HarmonicMap {
public:
    HarmonicMap(PowerSeries h, PowerSeries g) : h_(std::move(h)), g_(std::move(g)) {
        if (std::abs(h_[0]) > tol::zero || std::abs(g_[0]) > tol::zero)
            throw Error("HarmonicMap: h(0) = g(0) = 0 required");
    }

    const PowerSeries& h() const { return h_; }
    const PowerSeries& g() const { return g_; }

    const std::optional<ClosedForm>& closed_form() const { return cf_; }
    void attach_closed_form(ClosedForm cf) { cf_ = std::move(cf); }

private:
    PowerSeries h_, g_;
    std::optional<ClosedForm> cf_;
};

inline Complex eval_map(const HarmonicMap& f, Complex z, double r_max = tol::eval_radius) {
    require_finite(z, "eval_map");
    if (std::abs(z) > r_max * (1.0 + 1e-12))
        throw EvalOutsideDisk("eval_map: |z| exceeds r_max");
    if (f.closed_form() && std::abs(z) > 0.9)
        return f.closed_form()->h(z) + std::conj(f.closed_form()->g(z));
    return eval(f.h(), z, r_max) + std::conj(eval(f.g(), z, r_max));
}

// --- constructions ---------------------------------------------------------

/// Taylor coefficients of the target's analytic sum h+g (h + e^{-2i gamma} g
/// for slanted targets): z/(1-z), z/(1-z e^{i gamma}), or the strip map with
/// c_k = (-1)^{k+1} sin(k alpha)/(k sin alpha).
inline PowerSeries target_series(const TargetDomain& t, std::size_t order) {
    PowerSeries out(order);
    switch (t.kind()) {
    case TargetKind::right_half_plane:
        for (std::size_t k = 1; k < order; ++k) out.at(k) = 1.0;
        break;
    case TargetKind::slanted_half_plane:
        for (std::size_t k = 1; k < order; ++k) out.at(k) = std::polar(1.0, double(k - 1) * t.gamma());
        break;
    case TargetKind::vertical_strip: {
        const double s = std::sin(t.alpha());
        for (std::size_t k = 1; k < order; ++k) {
            const double sign = (k % 2 == 1) ? 1.0 : -1.0;
            out.at(k) = sign * std::sin(double(k) * t.alpha()) / (double(k) * s);
        }
        break;
    }
    }
    return out;
}

/// Shear construction: solve h' = T'/(1 + e^{-2i gamma} omega), g' = omega h'
/// and integrate with zero constants. For the right half-plane and the strip
/// gamma = 0 and the defining identity is h + g = T; the slanted case keeps
/// h + e^{-2i gamma} g = T.
inline HarmonicMap shear(const TargetDomain& t, const Dilatation& w, std::size_t order) {
    const PowerSeries T = target_series(t, order);
    const PowerSeries Tp = derivative(T);
    const PowerSeries ws = w.to_series(order - 1);

    PowerSeries den = ws;
    if (t.kind() == TargetKind::slanted_half_plane) den = scale(den, std::polar(1.0, -2.0 * t.gamma()));
    den.at(0) += 1.0;
    if (std::abs(den[0]) <= tol::zero)
        throw ShearSingular("shear: 1 + omega(0) vanishes");

    PowerSeries hp = div(Tp, den);
    PowerSeries gp = mul(ws, hp);
    return HarmonicMap(antiderivative(hp), antiderivative(gp));
}

namespace closed_forms {

inline Complex log1p_ratio(Complex z) { // log((1+z)/(1-z)), principal branch
    return std::log(1.0 + z) - std::log(1.0 - z);
}

inline Complex log1p_ratio_i(Complex z) { // log((1+iz)/(1-iz))
    const Complex iz = Complex(0.0, 1.0) * z;
    return std::log(1.0 + iz) - std::log(1.0 - iz);
}

} // namespace closed_forms

/// The canonical right half-plane map: h0 = (z - z^2/2)/(1-z)^2 with
/// coefficients (k+1)/2, g0 = -(z^2/2)/(1-z)^2 with coefficients -(k-1)/2.
inline HarmonicMap canonical_f0(std::size_t order) {
    PowerSeries h(order), g(order);
    for (std::size_t k = 1; k < order; ++k) {
        h.at(k) = 0.5 * double(k + 1);
        g.at(k) = -0.5 * (double(k) - 1.0);
    }
    HarmonicMap f(std::move(h), std::move(g));
    f.attach_closed_form(ClosedForm{
        "f0",
        [](Complex z) { const Complex d = 1.0 - z; return (z - 0.5 * z * z) / (d * d); },
        [](Complex z) { const Complex d = 1.0 - z; return -0.5 * z * z / (d * d); }});
    return f;
}

/// z itself as a harmonic map (g = 0); the render module's reference input.
inline HarmonicMap identity_map(std::size_t order) {
    PowerSeries h(order), g(order);
    h.at(1) = 1.0;
    HarmonicMap f(std::move(h), std::move(g));
    f.attach_closed_form(ClosedForm{"identity", [](Complex z) { return z; },
                                    [](Complex) { return Complex{}; }});
    return f;
}

} // namespace hconv
