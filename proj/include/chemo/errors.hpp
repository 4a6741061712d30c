#pragma once

#include <stdexcept>
#include <string>

namespace chemo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (K at 0, Y at 0, ...).
struct DomainError : Error {
  using Error::Error;
};

// Parameters outside the existence range of a solution family.
struct AdmissibilityError : Error {
  using Error::Error;
};

// Assembled profile would take negative density values.
struct PositivityError : AdmissibilityError {
  using AdmissibilityError::AdmissibilityError;
};

// A bracketed scalar equation has no root in its admissible interval.
struct NoRootError : Error {
  using Error::Error;
};

// Input is not of the expected shape (non-steady state, malformed partition, ...).
struct InvalidInput : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace chemo
