#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlfsr/anf.hpp"

namespace nlfsr {

inline constexpr unsigned kMinLength = 2;
inline constexpr unsigned kMaxLength = kMaxVars;
// Walk limit for period detection.
inline constexpr std::uint64_t kDefaultStepBudget = std::uint64_t{1} << 26;
// Largest register length for full state-space enumeration.
inline constexpr unsigned kDefaultExhaustiveBits = 24;

// Register content s_{n-1} ... s_0; bit i of `bits` is s_i.
struct State {
  std::uint64_t bits = 0;
  unsigned n = 0;

  bool bit(unsigned i) const { return (bits >> i) & 1; }
  std::string to_string() const;  // s_{n-1} first
  // Accepts an n-character binary string (s_{n-1} first) or 0x-prefixed hex.
  static State parse(std::string_view text, unsigned n);

  auto operator<=>(const State&) const = default;
};

struct BitSequence {
  std::vector<std::uint8_t> bits;
  std::optional<std::uint64_t> period;

  std::string to_string() const;
};

// An n-bit shift register with singular feedback: bit i is updated as
// f_i = x_{(i+1) mod n} XOR g_i, where g_i never touches x_{(i+1) mod n}.
// Singularity keeps the state graph branchless, so stepping is a bijection.
class Nlfsr {
 public:
  // Validates lengths, index ranges and singularity of every g_i.
  static Nlfsr make(unsigned n, std::vector<Anf> g);

  unsigned length() const { return n_; }
  const Anf& g(unsigned i) const { return g_[i]; }
  const std::vector<Anf>& functions() const { return g_; }
  unsigned shift_tap(unsigned i) const { return (i + 1) % n_; }
  // The full feedback function x_{(i+1) mod n} XOR g_i.
  Anf feedback(unsigned i) const;

  bool is_pure_shift() const;
  // Only bit n-1 has feedback; all other bits shift.
  bool is_fibonacci() const;

  bool operator==(const Nlfsr&) const = default;

 private:
  Nlfsr(unsigned n, std::vector<Anf> g) : n_(n), g_(std::move(g)) {}

  unsigned n_ = 0;
  std::vector<Anf> g_;
};

// All n bits update simultaneously from the previous state.
State step(const Nlfsr& r, State s);

// Bit 0 of the state at times 0 .. count-1.
BitSequence output_sequence(const Nlfsr& r, State s0, std::uint64_t count);

struct PeriodInfo {
  std::uint64_t state_period = 0;
  std::uint64_t output_period = 0;  // divides state_period
};

// Least T > 0 with state(t+T) = state(t). Singularity puts every state on a
// cycle, so this is the first return to s0.
PeriodInfo period(const Nlfsr& r, State s0,
                  std::uint64_t step_budget = kDefaultStepBudget);

struct Cycle {
  std::uint64_t length = 0;
  State representative;  // smallest state value on the cycle
};

// Partition of all 2^n states into disjoint cycles, ascending representative.
std::vector<Cycle> state_cycles(const Nlfsr& r,
                                unsigned max_bits = kDefaultExhaustiveBits);

std::ostream& operator<<(std::ostream& os, const State& s);

namespace detail {

// Flattened evaluator for tight simulation loops.
struct Stepper {
  struct BitFn {
    unsigned tap = 0;
    std::vector<std::uint64_t> term_masks;
  };
  unsigned n = 0;
  std::vector<BitFn> bits;

  explicit Stepper(const Nlfsr& r);

  std::uint64_t step(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < n; ++i) {
      const BitFn& f = bits[i];
      std::uint64_t v = (s >> f.tap) & 1;
      for (std::uint64_t m : f.term_masks) v ^= ((s & m) == m) ? 1 : 0;
      out |= v << i;
    }
    return out;
  }
};

}  // namespace detail
}  // namespace nlfsr
