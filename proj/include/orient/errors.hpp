#pragma once

#include <stdexcept>
#include <string>

namespace orient {

// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A stage that should succeed by construction did not. Indicates a wrong
// table value or an implementation bug, never bad user input.
class StageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orient
