#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Input text (instance, matching, Latin square) could not be parsed.
/// The message carries the position of the offending element.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A random-instance request cannot be satisfied.
class InfeasibleSpec : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow
