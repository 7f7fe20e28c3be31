#pragma once

#include <numbers>

#include "convolution.hpp"
#include "harmonic.hpp"

namespace hconv {

// Named fixture maps. Lowercase ids are right-half-plane or strip shears,
// uppercase ids their convolutions with the canonical map.
enum class ExampleMapId { f1, f2, f3, F1, F2, F3 };

namespace detail {

inline HarmonicMap with_cf(HarmonicMap f, ClosedForm cf) {
    f.attach_closed_form(std::move(cf));
    return f;
}

} // namespace detail

/// The six named maps, as truncated series with exact closed forms attached.
/// f1: half-plane shear with omega = z. f2: half-plane, omega = -z^2.
/// f3: strip (alpha = pi/2), omega = -z^2. FK = f0 * fK.
inline HarmonicMap example_map(ExampleMapId id, std::size_t order) {
    using closed_forms::log1p_ratio;
    using closed_forms::log1p_ratio_i;
    const auto right = TargetDomain::right_half_plane();
    const auto strip = TargetDomain::vertical_strip(std::numbers::pi / 2);

    switch (id) {
    case ExampleMapId::f1:
        return detail::with_cf(
            shear(right, Dilatation::monomial(0.0, 1), order),
            ClosedForm{"f1",
                       [](Complex z) { return 0.25 * log1p_ratio(z) + 0.5 * z / (1.0 - z); },
                       [](Complex z) { return -0.25 * log1p_ratio(z) + 0.5 * z / (1.0 - z); }});
    case ExampleMapId::f2:
        return detail::with_cf(
            shear(right, Dilatation::monomial(std::numbers::pi, 2), order),
            ClosedForm{"f2",
                       [](Complex z) {
                           const Complex d = 1.0 - z;
                           return 0.125 * log1p_ratio(z) + 0.5 * z / d + 0.25 * z / (d * d);
                       },
                       [](Complex z) {
                           const Complex d = 1.0 - z;
                           return -0.125 * log1p_ratio(z) + 0.5 * z / d - 0.25 * z / (d * d);
                       }});
    case ExampleMapId::f3:
        return detail::with_cf(
            shear(strip, Dilatation::monomial(std::numbers::pi, 2), order),
            ClosedForm{"f3",
                       [](Complex z) {
                           return 0.25 * log1p_ratio(z) - Complex(0, 0.25) * log1p_ratio_i(z);
                       },
                       [](Complex z) {
                           return -0.25 * log1p_ratio(z) - Complex(0, 0.25) * log1p_ratio_i(z);
                       }});
    case ExampleMapId::F1:
        return detail::with_cf(
            convolve_f0(example_map(ExampleMapId::f1, order)),
            ClosedForm{"F1",
                       [](Complex z) {
                           const Complex d = (1.0 - z) * (1.0 - z) * (1.0 + z);
                           return 0.125 * log1p_ratio(z) + (0.75 * z - 0.25 * z * z * z) / d;
                       },
                       [](Complex z) {
                           const Complex d = (1.0 - z) * (1.0 - z) * (1.0 + z);
                           return -0.125 * log1p_ratio(z) +
                                  (0.25 * z - 0.5 * z * z - 0.25 * z * z * z) / d;
                       }});
    case ExampleMapId::F2:
        return detail::with_cf(
            convolve_f0(example_map(ExampleMapId::f2, order)),
            ClosedForm{"F2",
                       [](Complex z) {
                           const Complex d = 1.0 - z;
                           const Complex q = d * d * d * (1.0 + z);
                           return 0.5 * (0.125 * log1p_ratio(z) + 0.5 * z / d +
                                         0.25 * z / (d * d) + z / q);
                       },
                       [](Complex z) {
                           const Complex d = 1.0 - z;
                           const Complex q = d * d * d * (1.0 + z);
                           return 0.5 * (-0.125 * log1p_ratio(z) + 0.5 * z / d -
                                         0.25 * z / (d * d) + z * z * z / q);
                       }});
    case ExampleMapId::F3:
        return detail::with_cf(
            convolve_f0(example_map(ExampleMapId::f3, order)),
            ClosedForm{"F3",
                       [](Complex z) {
                           const Complex d = 1.0 - z * z * z * z;
                           return 0.125 * log1p_ratio(z) - Complex(0, 0.125) * log1p_ratio_i(z) +
                                  0.5 * z / d;
                       },
                       [](Complex z) {
                           const Complex d = 1.0 - z * z * z * z;
                           return -0.125 * log1p_ratio(z) - Complex(0, 0.125) * log1p_ratio_i(z) +
                                  0.5 * z * z * z / d;
                       }});
    }
    throw BadParameter("example_map: unknown id");
}

} // namespace hconv
