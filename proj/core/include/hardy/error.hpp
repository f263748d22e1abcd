#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponent or other scalar parameter lies outside its admissible range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An index lies outside the window it refers to.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two windows that must share an index range do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The requested operator form is not handled by this routine.
class UnsupportedForm : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy
