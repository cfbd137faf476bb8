// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dax {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line, int column, const std::string &msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg),
        line(line), column(column) {}
};

// Raised when no step size above the minimum validates a Picard box;
// signals blow-up on the requested window or a tolerance that is too tight.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDelta : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MissingApproximant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IncompleteTrace : std::logic_error {
  using std::logic_error::logic_error;
};

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

} // namespace dax
