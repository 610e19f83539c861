#pragma once

#include <stdexcept>
#include <string>

namespace flagcurves {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
struct ParseError : Error {
  using Error::Error;
};

// Structurally invalid argument: wrong shape, zero denominator, division by
// zero, evaluation outside the domain.
struct DomainError : Error {
  using Error::Error;
};

// A nilpotent matrix was required.
struct NotNilpotentError : DomainError {
  using DomainError::DomainError;
};

// Curve generators must be nonzero: the zero generator gives a constant curve.
struct ZeroCurveError : DomainError {
  using DomainError::DomainError;
};

// Curve generators must lie in the nilradical fixed by the block structure.
struct NilradicalPatternError : DomainError {
  using DomainError::DomainError;
};

}  // namespace flagcurves
