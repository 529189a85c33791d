#pragma once

#include <stdexcept>
#include <string>

namespace affdimer {

/// Malformed external input (JSON, fraction strings, CLI tokens).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Homology classes do not sum to zero.
class ZeroSumViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Arrangement is not in general position.
class DegenerateArrangement : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A structural self-check failed. Always an arithmetic or logic bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace affdimer
