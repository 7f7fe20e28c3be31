// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hconv/hconv.hpp"

using namespace hconv;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

template <class Fn>
void criterion(int num, const char* label, Fn&& fn) {
    std::string detail;
    bool ok = false;
    const auto t0 = Clock::now();
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%s, %.2fs)\n", ok ? "PASS" : "FAIL", num, label,
                detail.c_str(), secs);
    if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

Polynomial from_roots(const std::vector<Complex>& roots, Complex lead) {
    std::vector<Complex> c{1.0};
    for (Complex r : roots) {
        std::vector<Complex> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    for (Complex& v : c) v *= lead;
    return Polynomial(std::move(c));
}

double coeff_gap(const PowerSeries& a, const PowerSeries& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < std::max(a.order(), b.order()); ++k)
        worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

bool c1_convolution_identity(std::string& detail) {
    const auto t0 = Clock::now();
    std::mt19937 rng(20260822u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t n = 128;
    const HarmonicMap f0 = canonical_f0(n);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        PowerSeries h(n), g(n);
        h.at(1) = 1.0;
        g.at(1) = Complex(0.3 * u(rng), 0.3 * u(rng));
        for (std::size_t k = 2; k < n; ++k) {
            h.at(k) = Complex(u(rng), u(rng)) / double(k);
            g.at(k) = Complex(u(rng), u(rng)) / double(k);
        }
        const HarmonicMap F(std::move(h), std::move(g));
        const HarmonicMap a = convolve_f0(F);
        const HarmonicMap b = convolve(f0, F);
        worst = std::max({worst, coeff_gap(a.h(), b.h()), coeff_gap(a.g(), b.g())});
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    detail = fmt("max gap %.3g", worst);
    return worst <= 1e-12 && secs < 1.0;
}

bool c2_square_sweep(std::string& detail) {
    const auto t0 = Clock::now();
    const SweepGrid grid = SweepGrid::radial(0.99, 20, 64);
    const double want = 0.99 * 0.99;
    double worst_dev = 0.0;
    bool all = true;
    for (int j = 0; j < 16; ++j) {
        const double theta = 2.0 * pi * j / 16.0;
        const auto rep = sweep_dilatation(omega_tilde_halfplane(Dilatation::monomial(theta, 2)), grid);
        all = all && rep.passed;
        worst_dev = std::max(worst_dev, std::abs(rep.max_modulus - want));
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    detail = fmt("max |sup - r^2| = %.3g", worst_dev);
    return all && worst_dev <= 1e-10 && secs < 5.0;
}

bool c3_linear_monomial_reduction(std::string& detail) {
    RootOracleOptions tight;
    tight.max_iter = 2000;
    tight.residual_tol = 1e-12;
    double worst_root = 0.0, worst_mod = 0.0;
    for (int j = 0; j < 64; ++j) {
        const double theta = 2.0 * pi * j / 64.0;
        const Polynomial q = omega_tilde_halfplane(Dilatation::monomial(theta, 1)).num;
        const CohnStep step = cohn_reduce(q);
        if (!step.applicable || step.reduced.degree() != 1) {
            detail = "reduction did not apply";
            return false;
        }
        const Complex root = -step.reduced[0] / step.reduced[1];
        const Complex want = 1.0 / 3.0 - (2.0 / 3.0) * std::polar(1.0, -theta);
        worst_root = std::max(worst_root, std::abs(root - want));
        for (Complex r : poly_roots_oracle(q, tight))
            worst_mod = std::max(worst_mod, std::abs(r));
    }
    detail = fmt("root gap %.3g, max |root| - 1 = %.3g", worst_root, worst_mod - 1.0);
    return worst_root <= 1e-12 && worst_mod <= 1.0 + 1e-9;
}

bool c4_witnesses(std::string& detail) {
    const auto t0 = Clock::now();
    // witness moduli as exact rationals, evaluated independently of the sweep code
    const double ref3 = 10773.0 / 5152.0;
    const double ref4 = 1977856.0 / 126875.0;
    const DilatationWitness w3 = remark1_witness(3);
    const DilatationWitness w4 = remark1_witness(4);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    detail = fmt("|w3| = %.6f, |w4| = %.6f", w3.modulus, w4.modulus);
    return w3.modulus > 2.0 && w4.modulus > 15.0 && std::abs(w3.modulus - ref3) <= 1e-12 &&
           std::abs(w4.modulus - ref4) <= 1e-11 && std::abs(w3.modulus / 2.0911 - 1.0) <= 1e-3 &&
           std::abs(w4.modulus / 15.589 - 1.0) <= 1e-3 && secs < 1.0;
}

bool c5_mobius_sweeps(std::string& detail) {
    const SweepGrid grid = SweepGrid::radial(0.999, 24, 64);
    double sup = 0.0, worst_root = 0.0;
    for (double a : {-0.99, -0.5, 0.0, 0.5, 0.99}) {
        const RationalDilatation rd = omega_tilde_halfplane(Dilatation::mobius(a));
        const auto rep = sweep_dilatation(rd, grid);
        if (!rep.passed) {
            detail = fmt("sup %.6f at a = %.2f", rep.max_modulus, a);
            return false;
        }
        sup = std::max(sup, rep.max_modulus);
        const CohnStep step = cohn_reduce(rd.num);
        if (!step.applicable) {
            detail = "reduction did not apply";
            return false;
        }
        const Complex root = -step.reduced[0] / step.reduced[1];
        worst_root = std::max(worst_root, std::abs(root - Complex(-(1.0 + 3.0 * a) / (a + 3.0))));
    }
    detail = fmt("sup %.6f, root gap %.3g", sup, worst_root);
    return sup < 1.0 && worst_root <= 1e-12;
}

bool c6_strip_sweeps(std::string& detail) {
    const SweepGrid grid = SweepGrid::radial(0.99, 20, 64);
    double sup = 0.0;
    for (int n : {1, 2})
        for (double alpha : {pi / 2, 2 * pi / 3, 5 * pi / 6})
            for (int j = 0; j < 16; ++j) {
                const double theta = 2.0 * pi * j / 16.0;
                const auto rep =
                    sweep_dilatation(omega_tilde_strip(Dilatation::monomial(theta, n), alpha), grid);
                if (!rep.passed) {
                    detail = fmt("sup %.6f at n = %.0f", rep.max_modulus, double(n));
                    return false;
                }
                sup = std::max(sup, rep.max_modulus);
            }

    // square case: quotient of the convolved series against -e^{i theta} z^2
    double worst = 0.0;
    for (double theta : {0.0, 2.0, 4.5}) {
        const HarmonicMap f =
            shear(TargetDomain::vertical_strip(2 * pi / 3), Dilatation::monomial(theta, 2), 512);
        const HarmonicMap F = convolve_f0(f);
        const PowerSeries hp = derivative(F.h());
        const PowerSeries gp = derivative(F.g());
        for (int i = 1; i <= 5; ++i)
            for (int j = 0; j < 8; ++j) {
                const Complex z = 0.17 * double(i) * std::polar(1.0, 2.0 * pi * j / 8.0);
                const Complex quot = eval(gp, z) / eval(hp, z);
                worst = std::max(worst, std::abs(quot + std::polar(1.0, theta) * z * z));
            }
    }
    detail = fmt("sup %.6f, collapse gap %.3g", sup, worst);
    return sup < 1.0 && worst <= 1e-8;
}

bool c7_minor_factorizations(std::string& detail) {
    double worst_rel = 0.0;
    for (int i = 0; i < 50; ++i)
        for (int j = 0; j < 50; ++j) {
            const double a = i / 50.0;
            const double x = -(j / 50.0);
            const RationalDilatation rd = omega_tilde_strip(Dilatation::mobius(a), std::acos(x));
            const SchurCohnReport sc = schur_cohn(rd.num);
            if (sc.minors.size() != 3) {
                detail = "unexpected minor count";
                return false;
            }
            const double m1 = 0.25 * (2 * a * x + a + 1) * (3 - 2 * a * x - a);
            const double m2 = 0.25 * (1 - x) * (1 - a) * (1 - 2 * a * x - a) *
                              (2 + 4 * a * x + 4 * a + x - 2 * a * a * x * x - 5 * a * a * x -
                               2 * a * a - 2 * a * x * x);
            const double p1 = 1 - x, p3 = 1 - a, q = 1 - 2 * a * x - a;
            const double m3 = 0.25 * (x + 1) * p1 * p1 * p1 * p3 * p3 * p3 * q * q * (1 + 3 * a);
            const double want[3] = {m1, m2, m3};
            for (int v = 0; v < 3; ++v)
                worst_rel = std::max(worst_rel, std::abs(sc.minors[v] - want[v]) / std::abs(want[v]));
        }

    // sign flip outside the parameter square
    const RationalDilatation rd = omega_tilde_strip(Dilatation::mobius(-0.5), std::acos(-0.5));
    const SchurCohnReport sc = schur_cohn(rd.num);
    const bool flip = sc.minors.size() == 3 && sc.minors[2] < 0.0;
    detail = fmt("max rel err %.3g, M3(-1/2,-1/2) = %.4f", worst_rel, flip ? sc.minors[2] : 0.0);
    return worst_rel <= 1e-9 && flip;
}

bool c8_zero_location_corpus(std::string& detail) {
    std::mt19937 rng(971203u);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> rad_in(0.05, 0.7);
    std::uniform_real_distribution<double> rad_out(1.3, 2.0);
    std::uniform_real_distribution<double> lead_mod(0.5, 2.0);
    std::uniform_int_distribution<int> deg(1, 6);
    std::bernoulli_distribution inside(0.5);

    ZeroCountOptions lenient;
    lenient.strict_boundary = false;

    int disagreements = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int d = deg(rng);
        std::vector<Complex> roots;
        int want = 0;
        for (int k = 0; k < d; ++k) {
            const bool in = inside(rng);
            roots.push_back(std::polar(in ? rad_in(rng) : rad_out(rng), ang(rng)));
            want += in ? 1 : 0;
        }
        const Polynomial p = from_roots(roots, std::polar(lead_mod(rng), ang(rng)));
        try {
            int oracle_inside = 0;
            for (Complex r : poly_roots_oracle(p))
                if (std::abs(r) < 1.0) ++oracle_inside;
            const int chain = count_zeros_in_disk(p, lenient);
            const bool minors = schur_cohn(p).all_inside;
            if (chain != want || oracle_inside != want || minors != (want == d)) ++disagreements;
        } catch (const Error&) {
            ++disagreements;
        }
    }
    detail = fmt("%.0f disagreements in 10000", double(disagreements));
    return disagreements == 0;
}

bool c9_fixture_closed_forms(std::string& detail) {
    const std::size_t n = 512;
    const HarmonicMap conv = convolve(canonical_f0(n), example_map(ExampleMapId::f1, n));
    auto H = [](Complex z) {
        return 0.125 * closed_forms::log1p_ratio(z) +
               (0.75 * z - 0.25 * z * z * z) / ((1.0 - z) * (1.0 - z) * (1.0 + z));
    };
    auto G = [](Complex z) {
        return -0.125 * closed_forms::log1p_ratio(z) +
               (0.25 * z - 0.5 * z * z - 0.25 * z * z * z) / ((1.0 - z) * (1.0 - z) * (1.0 + z));
    };
    double worst = 0.0;
    for (int i = 1; i <= 10; ++i)
        for (int j = 0; j < 100; ++j) {
            const Complex z = 0.08 * double(i) * std::polar(1.0, 2.0 * pi * j / 100.0);
            worst = std::max({worst, std::abs(eval(conv.h(), z) - H(z)),
                              std::abs(eval(conv.g(), z) - G(z))});
        }

    const PowerSeries wt = omega_tilde_general(example_map(ExampleMapId::f3, 64));
    double coeff_dev = 0.0;
    for (std::size_t k = 0; k < wt.order(); ++k)
        coeff_dev = std::max(coeff_dev, std::abs(wt[k] - (k == 2 ? Complex(1.0) : Complex(0.0))));

    detail = fmt("closed-form gap %.3g, dilatation dev %.3g", worst, coeff_dev);
    return worst <= 1e-8 && coeff_dev <= 1e-10;
}

bool c10_regions_and_level_curves(std::string& detail) {
    const SweepGrid grid = SweepGrid::radial(0.99, 20, 64);
    const auto r1 = region_membership(ExampleMapId::F1, grid, 256);
    const auto r2 = region_membership(ExampleMapId::F2, grid, 256);
    if (!(r1.passed && r1.max_modulus > 0.0 && r2.passed && r2.max_modulus > 0.0)) {
        detail = "membership sweep failed";
        return false;
    }

    const HarmonicMap F1 = example_map(ExampleMapId::F1, 256);
    double worst = 0.0;
    for (double c : {0.5, 1.0, 2.0})
        for (Complex z : level_curve_points(ExampleMapId::F1, c, 64))
            worst = std::max(worst, std::abs(eval_map(F1, z).imag() - 0.25 * c));

    detail = fmt("clearances %.3g/%.3g", r1.max_modulus, r2.max_modulus) +
             fmt(", level dev %.3g", worst);
    return worst <= 1e-6;
}

bool c11_convexity_instance(std::string& detail) {
    const std::size_t n = 512;
    const double gamma = pi / 4;
    const Dilatation none = Dilatation::series(PowerSeries(n));
    const HarmonicMap f = shear(TargetDomain::slanted_half_plane(gamma), none, n);
    const auto rep = convexity_in_direction(convolve(f, f), -pi / 2, SweepGrid::radial(0.95, 12, 64));
    detail = fmt("inf Re = %.6f", rep.max_modulus);
    return rep.passed;
}

} // namespace

int main() {
    criterion(1, "canonical convolution shortcut matches coefficient products", c1_convolution_identity);
    criterion(2, "square-monomial half-plane sweep peaks at r_max^2", c2_square_sweep);
    criterion(3, "linear-monomial reduction root and quadratic root bounds", c3_linear_monomial_reduction);
    criterion(4, "witness moduli exceed 2 and 15 and match the rational references", c4_witnesses);
    criterion(5, "Mobius half-plane sweeps pass with the expected reduction root", c5_mobius_sweeps);
    criterion(6, "strip sweeps pass and the square case collapses", c6_strip_sweeps);
    criterion(7, "cubic minors match the factored references on the parameter grid", c7_minor_factorizations);
    criterion(8, "zero counts agree with the oracle and minor signs on random polynomials", c8_zero_location_corpus);
    criterion(9, "first fixture matches its closed form, third has dilatation z^2", c9_fixture_closed_forms);
    criterion(10, "convolution images avoid the slit sets, level curves stay horizontal", c10_regions_and_level_curves);
    criterion(11, "convolved slanted shears are convex in the shared direction", c11_convexity_instance);
    return failures == 0 ? 0 : 1;
}
