#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, wrong shape, non-integer entries).
struct ParseError : Error {
  using Error::Error;
};

struct NotPrimitiveError : Error {
  using Error::Error;
};

struct TooFewEdgesError : Error {
  using Error::Error;
};

struct NotAManifoldError : Error {
  using Error::Error;
};

// Every candidate direction paired to zero with some dual vector. The
// direction search is constructed so this never surfaces.
struct GenericityFailure : Error {
  using Error::Error;
};

// Precondition violation on a numeric-domain operation.
struct DomainError : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

}  // namespace qtoric
