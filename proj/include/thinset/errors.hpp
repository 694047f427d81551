#pragma once

#include <stdexcept>
#include <string>

namespace thinset {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request would exceed the configured size or memory cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition on the input was not met.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input does not satisfy the structural hypothesis an algorithm relies on
/// (e.g. an extraction came up short of the promised size).
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed command line, config or experiment id.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Should be unreachable for valid inputs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace thinset
