#pragma once

#include <stdexcept>
#include <string>

namespace nlfsr {

// ANF product or substitution grew past the configured term cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A feedback function g_i depends on its own shift tap x_{(i+1) mod n}.
struct SingularityError : std::invalid_argument {
  SingularityError(unsigned bit_, unsigned variable_, const std::string& msg)
      : std::invalid_argument(msg), bit(bit_), variable(variable_) {}
  unsigned bit;
  unsigned variable;
};

// Exhaustive enumeration or simulation exceeded its configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The feedback graph does not reduce to the requested vertex.
struct NotDerivableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A shift move was refused; the message names the violated condition.
struct ShiftRejectedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Register spec text error, with 1-based source position.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, unsigned line_, unsigned column_)
      : std::runtime_error(msg), line(line_), column(column_) {}
  unsigned line;
  unsigned column;
};

}  // namespace nlfsr
