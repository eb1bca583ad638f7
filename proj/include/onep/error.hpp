#pragma once

#include <stdexcept>
#include <string>

namespace onep {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file contents, violated preconditions, unknown ids.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run on an instance above its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace onep
