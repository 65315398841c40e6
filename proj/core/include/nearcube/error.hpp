#pragma once

#include <stdexcept>
#include <string>

namespace nearcube {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A box with lo >= hi on some axis where a proper box was required.
class DegenerateBox : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range input (bad rational string, singular lattice, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The input violates a stated hypothesis of a check, as opposed to the
/// check itself failing.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A truncated numeric sum cannot be certified at the requested tolerance.
class TailBoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace nearcube
