#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "nlfsr/feedback_graph.hpp"
#include "nlfsr/register.hpp"

namespace nlfsr {

inline constexpr unsigned kDefaultSearchBits = 16;

enum class EqStatus {
  proven_equivalent,
  witness_found,
  no_witness,
  inconclusive,
};

enum class EqMethod { recurrence, exhaustive, window };

std::string to_string(EqStatus status);
std::string to_string(EqMethod method);

struct EquivalenceVerdict {
  EqStatus status = EqStatus::inconclusive;
  EqMethod method = EqMethod::recurrence;
  // Initial states replaying to identical output over `horizon` steps.
  std::optional<std::pair<State, State>> witness;
  std::optional<Recurrence> recurrence_left;
  std::optional<Recurrence> recurrence_right;
  std::uint64_t horizon = 0;
  std::optional<std::uint64_t> mismatch_at;
  std::string detail;
};

// Symbolic route: derive each register's terminal-bit recurrence; equal
// recurrences prove equivalence because every bit below the terminal is a
// pure shift, so the output replays the terminal-bit sequence and n seed
// values determine it. Unequal recurrences are inconclusive (the condition is
// sufficient, not necessary). Throws NotDerivableError when a feedback graph
// does not reduce to a single vertex at all.
EquivalenceVerdict prove_equivalent_uniform(
    const Nlfsr& left, const Nlfsr& right,
    std::size_t term_cap = kDefaultTermCap);

// Brute force over every pair of initial states, pruned by hashing output
// prefixes. `horizon` 0 picks 2^n + 2n. no_witness is exhaustive: no state
// pair matches over the full horizon.
EquivalenceVerdict search_equivalent_exhaustive(
    const Nlfsr& left, const Nlfsr& right, std::uint64_t horizon = 0,
    unsigned max_bits = kDefaultSearchBits);

// Constructive check for large registers: run `right` from s2, seed the
// Fibonacci register `left` with the first n output bits (its state is
// exactly that window), and compare the rest.
EquivalenceVerdict window_check(const Nlfsr& left, const Nlfsr& right,
                                State s2, std::uint64_t window);

}  // namespace nlfsr
