#pragma once

#include <stdexcept>
#include <string>

namespace wg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a documented invariant (bad matrix, missing edge, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An enumeration or canonicalization exceeded a configured budget.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A structural hypothesis of an operation does not hold
/// (e.g. a groupoid that should be simply connected is not).
class HypothesisError : public Error {
public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace wg
