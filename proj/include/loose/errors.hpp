#pragma once

#include <stdexcept>
#include <string>

namespace loose {

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text.
class FormatError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// Raised when an exhaustive computation would exceed its configured work
// bound. `estimated_work` carries the decimal estimate so the caller can
// consciously raise the guard.
class WorkBoundError : public std::runtime_error {
public:
  WorkBoundError(const std::string &what, std::string estimated_work)
      : std::runtime_error(what + " (estimated work " + estimated_work + ")"),
        estimated_work_(std::move(estimated_work)) {}

  const std::string &estimated_work() const noexcept { return estimated_work_; }

private:
  std::string estimated_work_;
};

// Raised when an internal invariant check fails. The message names the
// invariant.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace loose
