#pragma once

#include <stdexcept>
#include <string>

namespace tfu {

/// Base class for every error raised by the library. `code()` is a short,
/// stable, machine-parsable token used by the CLI error line.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* code() const noexcept = 0;
};

/// An input violated an operation's precondition (bad grid, odd n, off-lattice
/// shift, dimension mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "PRECONDITION"; }
};

/// The computation itself failed: overflow despite log-space accumulation,
/// singular covariance, non-finite samples.
class NumericalError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "NUMERICAL"; }
};

/// Malformed manifest, payload or JSON document.
class FormatError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "FORMAT"; }
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "IO"; }
};

[[noreturn]] void throw_precondition(const std::string& what);
[[noreturn]] void throw_numerical(const std::string& what);

inline void require(bool condition, const char* what) {
  if (!condition) throw_precondition(what);
}

}  // namespace tfu
