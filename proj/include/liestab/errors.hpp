#pragma once

#include <stdexcept>
#include <string>

namespace liestab {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (field specs, scalars, JSON, CLI specs).
struct SyntaxError : Error {
  using Error::Error;
};

// "GF(n)" with composite n.
struct NotPrimeError : Error {
  using Error::Error;
};

// Operands from different fields were combined.
struct FieldMismatchError : Error {
  using Error::Error;
};

// Incompatible matrix shapes.
struct ShapeError : Error {
  using Error::Error;
};

// Division by zero or inversion of a singular matrix.
struct SingularError : Error {
  using Error::Error;
};

// A span handed to the Lie engine is not closed under the bracket.
struct NotClosedError : Error {
  using Error::Error;
};

// A subspace that must be an ideal is not one.
struct NotIdealError : Error {
  using Error::Error;
};

// Bilinear form is neither symmetric nor antisymmetric.
struct NotClassifiableError : Error {
  using Error::Error;
};

// Classical-algebra spec invalid for the requested field.
struct BadSpecError : Error {
  using Error::Error;
};

// Graded algebra construction requires M != 0.
struct ZeroMatrixError : Error {
  using Error::Error;
};

// Invalid grid configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Operation not defined for this input (e.g. predictions for d = 0).
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace liestab
