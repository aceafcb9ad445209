#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

// Base class for every error the library raises on purpose.  Anything else
// escaping a public entry point is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing scalars or series over distinct quadratic fields Q(sqrt(d)).
struct FieldMismatchError : Error {
  using Error::Error;
};

// Inversion/division where the leading coefficient is not invertible.
struct NonInvertibleError : Error {
  using Error::Error;
};

// rational_pow asked for a root of a leading coefficient that does not lie
// in the working field.
struct RootExtractionError : Error {
  using Error::Error;
};

// compose(f, g) where g has non-positive order, or f is not a polynomial-like
// series with nonnegative integer exponents.
struct CompositionDomainError : Error {
  using Error::Error;
};

// An operation would need coefficients beyond the trusted precision, or an
// exponent grid finer than the supported one.
struct PrecisionError : Error {
  using Error::Error;
};

// Catalog file could not be parsed.
struct CatalogError : Error {
  using Error::Error;
};

// Registry lookup of a name that was never registered.
struct UnknownFormError : Error {
  using Error::Error;
};

}  // namespace qmf
