#pragma once

#include <stdexcept>
#include <string>

namespace otb {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (CLI exit code 1).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A certified identity failed to hold (CLI exit code 2).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace otb
