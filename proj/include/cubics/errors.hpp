#pragma once

#include <stdexcept>
#include <string>

namespace cubics {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonIntegralClassSize : Error { using Error::Error; };
struct UnsupportedExponent : Error { using Error::Error; };
struct TableMismatch : Error { using Error::Error; };
struct CardinalityMismatch : Error { using Error::Error; };
struct NotARoot : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct AmbiguousMatching : Error { using Error::Error; };
struct InconsistentMatching : Error { using Error::Error; };
struct NonIntegralDecomposition : Error { using Error::Error; };
struct InvalidAction : Error { using Error::Error; };
struct UnexpectedNullity : Error { using Error::Error; };
struct CertificateUnavailable : Error { using Error::Error; };
struct UnsupportedDegree : Error { using Error::Error; };
struct InexactDivision : Error { using Error::Error; };

}  // namespace cubics
