#include <catch2/catch_amalgamated.hpp>

#include "hconv/roots.hpp"

using namespace hconv;

namespace {

// expand prod (z - r_i), ascending coefficients
Polynomial from_roots(const std::vector<Complex>& roots, Complex lead = 1.0) {
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

double match_error(std::vector<Complex> found, std::vector<Complex> want) {
    // both sorted by (re, im) already; greedy pairing is enough for separated roots
    std::sort(want.begin(), want.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    double worst = 0.0;
    for (std::size_t k = 0; k < want.size(); ++k)
        worst = std::max(worst, std::abs(found[k] - want[k]));
    return worst;
}

} // namespace

TEST_CASE("oracle recovers separated complex roots") {
    const std::vector<Complex> want{Complex(0.5, 0.0), Complex(0.0, -0.25), Complex(2.0, 0.0)};
    const Polynomial p = from_roots(want, Complex(0.7, 0.3));
    const auto roots = poly_roots_oracle(p);
    REQUIRE(roots.size() == 3);
    REQUIRE(match_error(roots, want) < 1e-7);
}

TEST_CASE("degree one is solved directly") {
    const Polynomial p({Complex(1.0, 0.0), Complex(2.0, 0.0)});
    const auto roots = poly_roots_oracle(p);
    REQUIRE(roots.size() == 1);
    REQUIRE(std::abs(roots[0] - Complex(-0.5, 0.0)) < 1e-15);
}

TEST_CASE("double root is located to the residual-limited accuracy") {
    const Polynomial p = from_roots({Complex(0.3, 0.0), Complex(0.3, 0.0)});
    const auto roots = poly_roots_oracle(p);
    REQUIRE(roots.size() == 2);
    // |p| = |z - 0.3|^2 near the root, so 1e-8 residual caps accuracy near 1e-4
    for (Complex r : roots)
        REQUIRE(std::abs(r - Complex(0.3, 0.0)) < 2e-4);
}

TEST_CASE("oracle runs are deterministic") {
    const Polynomial p = from_roots({Complex(0.4, 0.1), Complex(-0.2, 0.7), Complex(1.5, -0.3)});
    const auto a = poly_roots_oracle(p);
    const auto b = poly_roots_oracle(p);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        REQUIRE(a[k].real() == b[k].real());
        REQUIRE(a[k].imag() == b[k].imag());
    }
}

TEST_CASE("trailing zero coefficients lower the degree before root finding") {
    const Polynomial p({Complex(1.0), Complex(2.0), Complex(0.0)});
    REQUIRE(p.degree() == 1);
    REQUIRE(poly_roots_oracle(p).size() == 1);
}

TEST_CASE("constant polynomials are rejected") {
    REQUIRE_THROWS_AS(poly_roots_oracle(Polynomial({Complex(3.0)})), Error);
}
