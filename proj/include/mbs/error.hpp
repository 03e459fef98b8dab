#pragma once

#include <stdexcept>
#include <string>

namespace mbs {

/// Base class of every error raised by the library. `category()` is a stable
/// machine-readable tag used by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* category() const noexcept = 0;
};

/// Malformed input: bad coordinates, kind/payload mismatch, out-of-range
/// indices, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "validation"; }
};

/// An exhaustive step would exceed its configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "capacity"; }
};

/// Unreadable or unparsable files.
class IoError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "io"; }
};

}  // namespace mbs
