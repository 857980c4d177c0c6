#pragma once

#include <stdexcept>

namespace gca {

// Base class for every failure the library raises on its own.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InexactDivision : Error { using Error::Error; };
struct MissingAssignment : Error { using Error::Error; };
struct Inhomogeneous : Error { using Error::Error; };
struct NegativeCoefficient : Error { using Error::Error; };
struct NonPositiveInput : Error { using Error::Error; };
struct NotSkewSymmetrizable : Error { using Error::Error; };
struct BadExchangePoly : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NoIntegralRoot : Error { using Error::Error; };
struct RootUnavailable : Error { using Error::Error; };
struct NonMonomialTropicalImage : Error { using Error::Error; };
struct NonZeroZExponent : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct TermLimit : Error { using Error::Error; };

}  // namespace gca
