#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlfsr/register.hpp"

namespace nlfsr {

// Dependency graph of the full feedback functions: edge i -> j iff bit j's
// next value reads bit i, i.e. i is in dep(f_j).
struct FeedbackGraph {
  unsigned n = 0;
  std::vector<std::uint64_t> preds;  // preds[j] = bitmask of i with i -> j

  bool has_edge(unsigned from, unsigned to) const {
    return (preds[to] >> from) & 1;
  }
  unsigned in_degree(unsigned v) const;
};

FeedbackGraph build_graph(const Nlfsr& r);

// Result of exhaustively substituting away in-degree-1 vertices. Substitution
// merges a vertex into its unique predecessor, so the partition of original
// vertices (and the induced quotient graph) is order-independent; which label
// of a merged class survives is pinned by the substitution order.
struct ReducedGraph {
  std::vector<unsigned> vertices;           // surviving labels, ascending
  std::map<unsigned, std::uint64_t> preds;  // predecessor mask per survivor
  std::map<unsigned, std::uint64_t> merged;  // survivor -> absorbed class
  std::optional<unsigned> single_vertex;

  // Label-independent view for comparing reductions done in different orders.
  std::vector<std::uint64_t> quotient_vertices() const;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> quotient_edges() const;
};

// Picks the next vertex to substitute among the current candidates.
using SubstitutionChooser =
    std::function<unsigned(const std::vector<unsigned>&)>;

// Canonical order: ascending vertex index among in-degree-1 vertices.
ReducedGraph reduce_graph(const FeedbackGraph& g);
ReducedGraph reduce_graph(const FeedbackGraph& g,
                          const SubstitutionChooser& pick);
ReducedGraph reduce_graph(const Nlfsr& r);

// ---------------------------------------------------------------------------
// Equation system over delayed signals, used to turn graph reduction into an
// explicit recurrence.

// The signal s_bit(t - delay), delay >= 1.
struct Tap {
  unsigned bit = 0;
  unsigned delay = 0;

  auto operator<=>(const Tap&) const = default;
  std::string to_string() const;  // "s3(t-1)"
};

// Product of distinct taps; the empty product is the constant 1.
struct TapTerm {
  std::vector<Tap> taps;  // sorted ascending

  unsigned degree() const { return static_cast<unsigned>(taps.size()); }
  auto operator<=>(const TapTerm&) const = default;
  std::string to_string() const;
};

bool tap_term_less(const TapTerm& a, const TapTerm& b);

// XOR-canonical polynomial over taps; the empty sum is the constant 0.
class TapPoly {
 public:
  TapPoly() = default;  // constant 0

  static TapPoly from_terms(std::vector<TapTerm> terms);
  // x_j of the ANF becomes s_j(t - delay).
  static TapPoly from_anf(const Anf& f, unsigned delay = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<TapTerm>& terms() const { return terms_; }
  std::uint64_t referenced_bits() const;

  TapPoly operator^(const TapPoly& other) const;
  static TapPoly mul(const TapPoly& a, const TapPoly& b, std::size_t term_cap);
  // Every delay grows by `extra`; max_delay guards the simple-path bound.
  TapPoly delayed(unsigned extra, unsigned max_delay) const;
  // Every occurrence of bit `bit` at delay d becomes `replacement` delayed d.
  TapPoly substitute_bit(unsigned bit, const TapPoly& replacement,
                         std::size_t term_cap, unsigned max_delay) const;

  bool operator==(const TapPoly&) const = default;
  std::string to_string() const;

 private:
  std::vector<TapTerm> terms_;
};

// The system s_i(t) = f_i(state at t-1), one equation per live bit. Each
// substitution removes a bit whose equation reads exactly one other bit, and
// rewrites every reference to it, accumulating delays.
class EquationSystem {
 public:
  explicit EquationSystem(const Nlfsr& r,
                          std::size_t term_cap = kDefaultTermCap);

  unsigned length() const { return n_; }
  std::vector<unsigned> vertices() const;
  const TapPoly& equation(unsigned bit) const;
  std::uint64_t referenced(unsigned bit) const;
  // In-degree 1 with a predecessor other than itself.
  bool substitutable(unsigned bit) const;
  void substitute(unsigned bit);
  std::optional<unsigned> sole_vertex() const;

 private:
  unsigned n_ = 0;
  std::size_t term_cap_ = kDefaultTermCap;
  std::map<unsigned, TapPoly> eqs_;
};

// One bit's sequence expressed from its own n previous values.
struct Recurrence {
  unsigned bit = 0;
  unsigned order = 0;  // register length; delays range over 1..order
  Anf terms;           // variable index k encodes the delay k+1

  // Next value from the previous values; history[k] = s(t-1-k).
  bool next(std::span<const std::uint8_t> history) const;

  bool operator==(const Recurrence&) const = default;
  std::string to_string() const;  // "s(t) = s(t-2) + s(t-1)*s(t-3)"
};

// Reduces the equation system onto the requested bit (which is never
// substituted away). Throws NotDerivableError when the system cannot be
// brought down to that single bit.
Recurrence derive_recurrence(const Nlfsr& r, unsigned bit,
                             std::size_t term_cap = kDefaultTermCap);

std::ostream& operator<<(std::ostream& os, const Recurrence& rec);

}  // namespace nlfsr
