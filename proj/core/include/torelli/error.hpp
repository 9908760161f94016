#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

/// Base of every exception thrown by the library. `stage()` names the
/// computation that failed and is echoed into machine-readable CLI errors.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& detail)
      : std::runtime_error(detail), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Operands live in incompatible scalar domains (e.g. two conductors).
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (index range, rank mismatch,
/// membership requirement, malformed input).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported arity of an algorithm.
class UnsupportedArity : public Error {
 public:
  using Error::Error;
};

/// A resource guard (degree cap, n cap, time budget) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug or a false
/// mathematical claim, never bad input.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace torelli
