#pragma once

#include <stdexcept>
#include <string>

namespace longcycle {

/// Base of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside the operation's domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An exact solver was handed an instance above its configured size cap.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A coloring violates the no red-black edge property.
class InvalidColoring : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the regime the construction supports
/// (e.g. an empty strong 4-core).
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated. Indicates a bug.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace longcycle
