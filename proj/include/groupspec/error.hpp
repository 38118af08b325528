#pragma once

#include <stdexcept>
#include <string>

namespace groupspec {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a precondition the caller violated (not normal, not a
/// homomorphism, bad name, ...). CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded. CLI exit code 2.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; the computation contradicts a
/// proven identity. CLI exit code 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace groupspec
