#pragma once

#include <stdexcept>
#include <string>

namespace lsb {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid field specification or division by zero.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Shape or ambient-dimension mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The requested method needs element enumeration and the field does not
/// support it (rationals where a finite field is required).
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold (e.g. classifying a non-nilpotent
/// algebra).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration size cap was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace lsb
