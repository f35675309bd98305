#pragma once

#include <stdexcept>

namespace hermite2d {

/// Malformed scalar/matrix/polynomial text or JSON input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sign query on a value with a nonzero imaginary component.
struct NotRealError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Evaluation hit a variable that occurs in the polynomial but has no value.
struct UnboundVariableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hermite2d
