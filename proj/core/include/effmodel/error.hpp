#pragma once

#include <stdexcept>
#include <string>

namespace effmodel {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad expression text, non-prime p, unknown variable.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A precondition on mathematical data was violated (non-integral entry,
/// unsupported characteristic, non-triangular rewrite system, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Conductor pair outside the two supported degeneration regimes.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold exactly did not. `residual()` carries the
/// printed nonzero difference when one is available.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, std::string residual = {})
      : Error(residual.empty() ? what : what + " (residual: " + residual + ")"),
        residual_(std::move(residual)) {}

  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string residual_;
};

}  // namespace effmodel
