#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "convolution.hpp"
#include "examples.hpp"
#include "harmonic.hpp"

namespace hconv {

// --- sweep grids -------------------------------------------------------------

struct SweepGrid {
    std::vector<double> radii;           // strictly increasing, all < 1
    std::size_t angles_per_radius = 64;
    double r_max = tol::eval_radius;

    // n_radii equally spaced radii ending exactly at r_hi.
    static SweepGrid radial(double r_hi, std::size_t n_radii, std::size_t angles) {
        if (!(r_hi > 0.0 && r_hi < 1.0) || n_radii == 0 || angles == 0)
            throw BadParameter("SweepGrid::radial: need 0 < r_hi < 1 and nonzero counts");
        SweepGrid g;
        g.radii.resize(n_radii);
        for (std::size_t i = 0; i + 1 < n_radii; ++i)
            g.radii[i] = r_hi * double(i + 1) / double(n_radii);
        g.radii[n_radii - 1] = r_hi;
        g.angles_per_radius = angles;
        g.r_max = r_hi;
        return g;
    }
};

namespace detail {

inline void check_grid(const SweepGrid& g) {
    if (g.radii.empty() || g.angles_per_radius == 0)
        throw BadParameter("SweepGrid: empty");
    double prev = 0.0;
    for (double r : g.radii) {
        if (!(r > prev && r < 1.0))
            throw BadParameter("SweepGrid: radii must be strictly increasing and < 1");
        prev = r;
    }
}

// Visits r e^{it}; quadrant_only restricts t to the open first quadrant.
template <class Fn>
void for_each_point(const SweepGrid& g, bool quadrant_only, Fn&& fn) {
    check_grid(g);
    const double full = 2.0 * std::numbers::pi;
    for (double r : g.radii) {
        for (std::size_t j = 0; j < g.angles_per_radius; ++j) {
            const double t = quadrant_only
                                 ? 0.5 * std::numbers::pi * (double(j) + 0.5) / double(g.angles_per_radius)
                                 : full * double(j) / double(g.angles_per_radius);
            fn(r * Complex(std::cos(t), std::sin(t)));
        }
    }
}

} // namespace detail

// Outcome of a certification sweep. max_modulus carries the governing
// extremum: sup |omega| for univalence claims (passed iff < 1), inf of the
// checked real part for positivity claims (passed iff > 0), min slit
// clearance for region claims.
struct CertificationReport {
    std::string claim;
    double max_modulus = 0.0;
    Complex witness;
    bool passed = false;
};

// --- local univalence sweeps ---------------------------------------------------

inline CertificationReport sweep_dilatation(const RationalDilatation& w, const SweepGrid& grid) {
    CertificationReport rep;
    rep.claim = "sup |omega~| < 1 on grid";
    rep.max_modulus = -1.0;
    detail::for_each_point(grid, false, [&](Complex z) {
        const double m = std::abs(w.eval(z));
        if (m > rep.max_modulus) { rep.max_modulus = m; rep.witness = z; }
    });
    rep.passed = rep.max_modulus < 1.0;
    return rep;
}

/// Sweep of the map's own dilatation g'/h' from the truncated series.
inline CertificationReport sweep_dilatation(const HarmonicMap& f, const SweepGrid& grid) {
    const PowerSeries hp = derivative(f.h());
    const PowerSeries gp = derivative(f.g());
    CertificationReport rep;
    rep.claim = "sup |g'/h'| < 1 on grid";
    rep.max_modulus = -1.0;
    detail::for_each_point(grid, false, [&](Complex z) {
        const Complex d = eval(hp, z, grid.r_max);
        if (std::abs(d) <= tol::zero)
            throw DenominatorVanishes("sweep_dilatation: h' vanishes at a grid point");
        const double m = std::abs(eval(gp, z, grid.r_max) / d);
        if (m > rep.max_modulus) { rep.max_modulus = m; rep.witness = z; }
    });
    rep.passed = rep.max_modulus < 1.0;
    return rep;
}

// --- counterexample witnesses ---------------------------------------------------

struct DilatationWitness {
    double theta = 0.0;
    Complex z0;
    double modulus = 0.0;
};

/// For n >= 3 the convolved dilatation escapes the disk: with omega = -z^n
/// (odd n) or z^n (even n), |omega~(-n/(n+1))| > 1.
inline DilatationWitness remark1_witness(int n) {
    if (n < 3) throw BadParameter("remark1_witness: n >= 3 required");
    DilatationWitness w;
    w.theta = (n % 2 == 1) ? std::numbers::pi : 0.0;
    w.z0 = Complex(-double(n) / double(n + 1), 0.0);
    const RationalDilatation rd = omega_tilde_halfplane(Dilatation::monomial(w.theta, n));
    w.modulus = std::abs(rd.eval(w.z0));
    return w;
}

// --- direction convexity ---------------------------------------------------------

/// Sampled positivity of Re{ z F'(z) / phi(z) } with phi = z e^{ia}/(1 - z e^{ia})^2,
/// evaluated as Re{ F'(z) (1 - z e^{ia})^2 e^{-ia} }. Positivity on the disk
/// means F is convex in the direction -a.
inline CertificationReport royster_ziegler_check(const PowerSeries& F, double alpha,
                                                 const SweepGrid& grid) {
    const PowerSeries Fp = derivative(F);
    const Complex ea = std::polar(1.0, alpha);
    CertificationReport rep;
    rep.claim = "inf Re{zF'/phi} > 0 on grid";
    rep.max_modulus = std::numeric_limits<double>::infinity();
    detail::for_each_point(grid, false, [&](Complex z) {
        const Complex u = 1.0 - z * ea;
        const double v = (eval(Fp, z, grid.r_max) * u * u * std::conj(ea)).real();
        if (v < rep.max_modulus) { rep.max_modulus = v; rep.witness = z; }
    });
    rep.passed = rep.max_modulus > 0.0;
    return rep;
}

/// Convexity of f = h + conj(g) in the given direction: local univalence
/// sweep first, then the positivity check applied to the analytic combination
/// e^{id}(h - e^{-2id} g) with d = -direction, which shears f onto that line.
inline CertificationReport convexity_in_direction(const HarmonicMap& f, double direction,
                                                  const SweepGrid& grid) {
    const CertificationReport lu = sweep_dilatation(f, grid);
    if (!lu.passed)
        throw NotLocallyUnivalent("convexity_in_direction: dilatation sweep failed");

    const double d = -direction;
    const Complex rot = std::polar(1.0, d);
    const Complex twist = std::polar(1.0, -2.0 * d);
    const std::size_t n = f.h().order();
    PowerSeries F(n);
    for (std::size_t k = 0; k < n; ++k) F.at(k) = rot * (f.h()[k] - twist * f.g()[k]);
    return royster_ziegler_check(F, d, grid);
}

// --- image region claims -----------------------------------------------------------

namespace detail {

inline double dist_horizontal_ray(Complex w, double y0, double x_from, bool to_left) {
    const double x = w.real(), y = w.imag();
    const bool on_span = to_left ? (x <= x_from) : (x >= x_from);
    if (on_span) return std::abs(y - y0);
    return std::hypot(x - x_from, y - y0);
}

inline double dist_vertical_ray(Complex w, double x0, double y_from, bool upward) {
    const double x = w.real(), y = w.imag();
    const bool on_span = upward ? (y >= y_from) : (y <= y_from);
    if (on_span) return std::abs(x - x0);
    return std::hypot(x - x0, y - y_from);
}

} // namespace detail

// Slit sets cut out of the plane by the convolution images: two horizontal
// half-lines, those plus a vertical pair sharing the cap abscissa, or the
// first-quadrant pair {off + iy : y >= off} and {x + i off : x >= off}.
class SlitRegion {
public:
    enum class Kind { two_slits, four_half_lines, quadrant_slits };

    static SlitRegion two_slits(double y_offset, double x_cap) {
        require_positive(y_offset, x_cap);
        return SlitRegion(Kind::two_slits, y_offset, x_cap);
    }
    static SlitRegion four_half_lines(double y_offset, double x_cap) {
        require_positive(y_offset, x_cap);
        return SlitRegion(Kind::four_half_lines, y_offset, x_cap);
    }
    static SlitRegion quadrant_slits(double offset) {
        require_positive(offset, offset);
        return SlitRegion(Kind::quadrant_slits, offset, offset);
    }

    Kind kind() const { return kind_; }

    // Euclidean distance from w to the slit set.
    double distance(Complex w) const {
        switch (kind_) {
        case Kind::two_slits:
            return std::min(detail::dist_horizontal_ray(w, y_, -x_, true),
                            detail::dist_horizontal_ray(w, -y_, -x_, true));
        case Kind::four_half_lines: {
            const double horiz = std::min(detail::dist_horizontal_ray(w, y_, -x_, true),
                                          detail::dist_horizontal_ray(w, -y_, -x_, true));
            const double vert = std::min(detail::dist_vertical_ray(w, -x_, y_, true),
                                         detail::dist_vertical_ray(w, -x_, -y_, false));
            return std::min(horiz, vert);
        }
        case Kind::quadrant_slits:
            return std::min(detail::dist_vertical_ray(w, y_, y_, true),
                            detail::dist_horizontal_ray(w, y_, y_, false));
        }
        throw BadParameter("SlitRegion: unknown kind");
    }

private:
    static void require_positive(double a, double b) {
        if (!(a > 0.0) || !(b > 0.0)) throw BadParameter("SlitRegion: parameters must be positive");
    }
    SlitRegion(Kind k, double y, double x) : kind_(k), y_(y), x_(x) {}
    Kind kind_;
    double y_; // offset from the real axis (or quadrant offset)
    double x_; // cap abscissa magnitude, slits at Re = -x_
};

inline SlitRegion example_region(ExampleMapId id) {
    switch (id) {
    case ExampleMapId::F1: return SlitRegion::four_half_lines(std::numbers::pi / 8, 0.25);
    case ExampleMapId::F2: return SlitRegion::two_slits(std::numbers::pi / 16, 0.25);
    case ExampleMapId::F3: return SlitRegion::quadrant_slits(std::numbers::pi / 8);
    default: throw BadParameter("example_region: only the convolution examples have region claims");
    }
}

inline constexpr double region_clearance_floor = 1e-9;

/// Image membership sweep: every image point of the named convolution map
/// must stay clear of its slit set. F3's claim covers the first quadrant of
/// the disk only. Throws RegionViolation when a point comes within 1e-9 of a
/// slit; otherwise reports the minimum clearance.
inline CertificationReport region_membership(ExampleMapId which, const SweepGrid& grid,
                                             std::size_t order = 256) {
    const SlitRegion region = example_region(which);
    const HarmonicMap map = example_map(which, order);
    const bool quadrant = which == ExampleMapId::F3;

    CertificationReport rep;
    rep.claim = "image points clear the slit set";
    rep.max_modulus = std::numeric_limits<double>::infinity();
    Complex worst_w;
    detail::for_each_point(grid, quadrant, [&](Complex z) {
        const Complex w = eval_map(map, z, grid.r_max);
        const double c = region.distance(w);
        if (c < rep.max_modulus) { rep.max_modulus = c; rep.witness = z; worst_w = w; }
    });
    if (rep.max_modulus < region_clearance_floor)
        throw RegionViolation("region_membership: image point within 1e-9 of the slit set near z = (" +
                              std::to_string(rep.witness.real()) + ", " +
                              std::to_string(rep.witness.imag()) + ")");
    rep.passed = true;
    return rep;
}

// --- level curves ------------------------------------------------------------------

namespace detail {

// Root of tan t = c - t in (0, min{c, pi/2}); tan t + t is strictly
// increasing there so bisection cannot fail.
inline double theta_c_root(double c) {
    double lo = 1e-12;
    double hi = std::min(c, std::numbers::pi / 2) - 1e-12;
    if (!(hi > lo)) throw BadParameter("level_curve_points: empty parameter range");
    auto fn = [c](double t) { return std::tan(t) - (c - t); };
    if (fn(lo) >= 0.0 || fn(hi) <= 0.0)
        throw BadParameter("level_curve_points: bisection bracket failed");
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (fn(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

/// Disk preimages of one level curve of the named convolution map, via the
/// half-plane parameter zeta and z = (zeta-1)/(zeta+1). Images under F1 and
/// F3 have constant imaginary part c/4, under F2 c/8. The parameter interval
/// keeps a 2% margin at both ends so |zeta| stays moderate.
inline std::vector<Complex> level_curve_points(ExampleMapId example, double c,
                                               std::size_t samples) {
    if (!(c > 0.0)) throw BadParameter("level_curve_points: c > 0 required");
    if (samples < 2) throw BadParameter("level_curve_points: at least two samples");

    const double hi = std::min(c, std::numbers::pi / 2);
    std::vector<Complex> out;
    out.reserve(samples);

    auto push = [&out](Complex zeta) { out.push_back((zeta - 1.0) / (zeta + 1.0)); };

    switch (example) {
    case ExampleMapId::F1:
    case ExampleMapId::F2: {
        const double div = example == ExampleMapId::F2 ? 3.0 : 1.0;
        for (std::size_t j = 0; j < samples; ++j) {
            const double t = hi * (0.02 + 0.96 * double(j) / double(samples - 1));
            const double xi = std::sqrt((c - t) / std::tan(t) / div);
            const double eta = std::sqrt((c - t) * std::tan(t) / div);
            push(Complex(xi, eta));
        }
        return out;
    }
    case ExampleMapId::F3: {
        const double tc = detail::theta_c_root(c);
        const double span = hi - tc;
        if (!(span > 0.0)) throw BadParameter("level_curve_points: empty parameter range");
        for (std::size_t j = 0; j < samples; ++j) {
            const double t = tc + span * (0.02 + 0.96 * double(j) / double(samples - 1));
            const double q = 2.0 * std::cos(t) * std::sqrt(std::tan(t) / (c - t) - 1.0);
            const double r = 0.5 * (q + std::sqrt(q * q + 4.0));
            push(r * Complex(std::cos(t), std::sin(t)));
        }
        return out;
    }
    default:
        throw BadParameter("level_curve_points: only the convolution examples have level curves");
    }
}

/// The constant imaginary part of the named map's level-curve images.
inline double level_curve_image_offset(ExampleMapId example, double c) {
    switch (example) {
    case ExampleMapId::F1:
    case ExampleMapId::F3: return 0.25 * c;
    case ExampleMapId::F2: return 0.125 * c;
    default: throw BadParameter("level_curve_image_offset: only the convolution examples");
    }
}

} // namespace hconv
