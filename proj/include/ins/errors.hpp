#pragma once

#include <stdexcept>
#include <string>

namespace ins {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interval endpoints out of [0,1], out of order, or NaN.
class InvalidInterval : public Error {
 public:
  using Error::Error;
};

/// Binary operator applied to sets over different universes.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// Scalar multiplication/division by a ≤ 0.
class NonPositiveScalar : public Error {
 public:
  using Error::Error;
};

/// Malformed universe: duplicate labels or a value count that does not match.
class InvalidUniverse : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidDomain : public Error {
 public:
  using Error::Error;
};

class UnknownLaw : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace ins
