#pragma once

#include <stdexcept>
#include <string>

namespace hoc {

/// Operands live on different charts or in incompatible bracket contexts.
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument violates an operation's precondition (degree, index range, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested computation is outside what the engine supports symbolically.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure check was asked to run on a candidate that does not satisfy
/// the hypotheses the checked statement presupposes.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed value broke an invariant that should hold for a valid
/// candidate; carries the evidence in the message.
class InconsistentCandidateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hoc
