#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlfsr/register.hpp"

namespace nlfsr {

// Largest index below which every bit is a pure shift; equivalently the
// smallest index with feedback, or n-1 when there is none.
unsigned terminal_bit(const Nlfsr& r);

struct UniformityReport {
  bool uniform = false;
  unsigned terminal = 0;
  // Set when not uniform: the bit above the terminal whose feedback reaches
  // too high, and the offending variable index.
  std::optional<unsigned> violating_bit;
  std::optional<unsigned> violating_var;
};

// Uniform = singular and, for every bit above the terminal bit, the feedback
// reads variables at or below the terminal bit only.
UniformityReport uniformity(const Nlfsr& r);
bool is_uniform(const Nlfsr& r);

// Moving product-term `term` from g_from down to g_to; every index of the
// term decreases by (from - to) modulo n.
struct ShiftMove {
  unsigned from = 0;
  unsigned to = 0;
  Monomial term;

  bool operator==(const ShiftMove&) const = default;
  std::string to_string() const;  // "x1*x3: g3 -> g2"
};

enum class ShiftGuard {
  raw,       // structural move only
  theorem2,  // requires to >= from - alpha_min(term), the no-wrap condition
  lemma3,    // requires can_shift_preserving to accept
};

struct ShiftCheck {
  bool allowed = false;
  std::string reason;  // violated condition when rejected
};

// Sufficient condition for a single move to preserve equivalence on a uniform
// register: the no-wrap condition plus either destination at or above the
// terminal bit, or every feedback from the destination upward staying within
// the destination index after the move.
ShiftCheck can_shift_preserving(const Nlfsr& r, const ShiftMove& m);

// Applies one move under the requested guard. Throws ShiftRejectedError with
// the violated condition named. The constant term is never shifted.
Nlfsr apply_shift(const Nlfsr& r, const ShiftMove& m, ShiftGuard guard);

struct TransformReport {
  unsigned tau_before = 0;
  unsigned tau_after = 0;
  // Value of the span formula max(alpha_max(p) - alpha_min(p)) over the
  // non-linear terms; the result's terminal bit never lies below it.
  unsigned algorithm_tau = 0;
  bool uniform_before = false;
  bool uniform_after = false;
  std::vector<ShiftMove> moves;
};

// Moves every term of g_{n-1} as far down as uniformity allows: terms whose
// lowest variable permits it land with that variable rebased to x0; the rest
// land on the computed terminal bit. Input must be a Fibonacci register.
std::pair<Nlfsr, TransformReport> fully_shift(const Nlfsr& r);

struct FullyShiftedReport {
  bool fully_shifted = false;
  std::optional<ShiftMove> witness;  // a move whose result is still uniform
};

// A register is fully shifted when no single term can move to a lower
// function without wrapping an index past x0 or breaking uniformity.
FullyShiftedReport fully_shifted_status(const Nlfsr& r);
bool is_fully_shifted(const Nlfsr& r);

std::ostream& operator<<(std::ostream& os, const ShiftMove& m);

}  // namespace nlfsr
