#pragma once

#include <stdexcept>
#include <string>

namespace hconv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series_core
struct DivisionBySingular : Error { using Error::Error; };
struct EvalOutsideDisk : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// harmonic
struct ShearSingular : Error { using Error::Error; };
struct BadAlpha : Error { using Error::Error; };

// convolution
struct DenominatorVanishes : Error { using Error::Error; };
struct UnsupportedVariant : Error { using Error::Error; };

// zerocheck
struct NotApplicable : Error { using Error::Error; };
struct BoundaryAmbiguous : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };

// certify
struct NotLocallyUnivalent : Error { using Error::Error; };
struct RegionViolation : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };

// cli_render
struct IoError : Error { using Error::Error; };

} // namespace hconv
