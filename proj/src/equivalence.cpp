#include "nlfsr/equivalence.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "nlfsr/transform.hpp"

namespace nlfsr {

std::string to_string(EqStatus status) {
  switch (status) {
    case EqStatus::proven_equivalent:
      return "proven-equivalent";
    case EqStatus::witness_found:
      return "witness-found";
    case EqStatus::no_witness:
      return "no-witness";
    case EqStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(EqMethod method) {
  switch (method) {
    case EqMethod::recurrence:
      return "recurrence";
    case EqMethod::exhaustive:
      return "exhaustive";
    case EqMethod::window:
      return "window";
  }
  return "?";
}

namespace {

// Recurrence anchored to the register output: derived at a vertex whose
// sequence the output replays through pure shifts.
struct OutputRecurrence {
  std::optional<Recurrence> rec;
  std::string why;  // set when absent
};

OutputRecurrence output_recurrence(const Nlfsr& r, std::size_t term_cap) {
  unsigned tau = terminal_bit(r);
  try {
    return {derive_recurrence(r, tau, term_cap), {}};
  } catch (const NotDerivableError&) {
    // fall through to the reduced-vertex route
  }
  ReducedGraph red = reduce_graph(r);
  if (!red.single_vertex) {
    throw NotDerivableError(
        "feedback graph is irreducible (" +
        std::to_string(red.vertices.size()) + " vertices remain)");
  }
  unsigned v = *red.single_vertex;
  for (unsigned j = 0; j < v; ++j) {
    if (!r.g(j).is_zero()) {
      return {std::nullopt,
              "reduced vertex " + std::to_string(v) +
                  " has no pure shift path to the output (g" +
                  std::to_string(j) + " is not zero)"};
    }
  }
  return {derive_recurrence(r, v, term_cap), {}};
}

}  // namespace

EquivalenceVerdict prove_equivalent_uniform(const Nlfsr& left,
                                            const Nlfsr& right,
                                            std::size_t term_cap) {
  if (left.length() != right.length()) {
    throw std::invalid_argument(
        "recurrence comparison requires registers of equal length");
  }
  EquivalenceVerdict verdict;
  verdict.method = EqMethod::recurrence;

  OutputRecurrence l = output_recurrence(left, term_cap);
  OutputRecurrence r = output_recurrence(right, term_cap);
  if (!l.rec || !r.rec) {
    verdict.status = EqStatus::inconclusive;
    verdict.detail = !l.rec ? l.why : r.why;
    verdict.recurrence_left = l.rec;
    verdict.recurrence_right = r.rec;
    return verdict;
  }
  verdict.recurrence_left = l.rec;
  verdict.recurrence_right = r.rec;
  if (l.rec->terms == r.rec->terms) {
    verdict.status = EqStatus::proven_equivalent;
    verdict.detail = "terminal-bit recurrences agree: " + l.rec->to_string();
  } else {
    verdict.status = EqStatus::inconclusive;
    verdict.detail = "recurrences differ (the condition is sufficient only)";
  }
  return verdict;
}

namespace {

std::uint64_t prefix_hash(const detail::Stepper& stepper, std::uint64_t s0,
                          std::uint64_t horizon) {
  // FNV-1a over the output bits, folded in word-sized chunks
  std::uint64_t hash = 1469598103934665603ull;
  std::uint64_t word = 0;
  unsigned fill = 0;
  std::uint64_t s = s0;
  for (std::uint64_t t = 0; t < horizon; ++t) {
    word |= (s & 1) << fill;
    if (++fill == 64) {
      hash = (hash ^ word) * 1099511628211ull;
      word = 0;
      fill = 0;
    }
    s = stepper.step(s);
  }
  if (fill != 0) hash = (hash ^ word) * 1099511628211ull;
  return hash;
}

bool same_prefix(const detail::Stepper& a, std::uint64_t sa,
                 const detail::Stepper& b, std::uint64_t sb,
                 std::uint64_t horizon) {
  std::uint64_t x = sa;
  std::uint64_t y = sb;
  for (std::uint64_t t = 0; t < horizon; ++t) {
    if ((x & 1) != (y & 1)) return false;
    x = a.step(x);
    y = b.step(y);
  }
  return true;
}

}  // namespace

EquivalenceVerdict search_equivalent_exhaustive(const Nlfsr& left,
                                                const Nlfsr& right,
                                                std::uint64_t horizon,
                                                unsigned max_bits) {
  if (left.length() > max_bits || right.length() > max_bits) {
    throw ResourceError("exhaustive search limited to " +
                        std::to_string(max_bits) + " bits");
  }
  const unsigned nmax = std::max(left.length(), right.length());
  if (horizon == 0) horizon = (std::uint64_t{1} << nmax) + 2 * nmax;

  EquivalenceVerdict verdict;
  verdict.method = EqMethod::exhaustive;
  verdict.horizon = horizon;

  detail::Stepper sl(left);
  detail::Stepper sr(right);
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> table;
  const std::uint64_t left_states = std::uint64_t{1} << left.length();
  for (std::uint64_t s = 0; s < left_states; ++s) {
    table[prefix_hash(sl, s, horizon)].push_back(s);
  }
  const std::uint64_t right_states = std::uint64_t{1} << right.length();
  for (std::uint64_t s = 0; s < right_states; ++s) {
    auto it = table.find(prefix_hash(sr, s, horizon));
    if (it == table.end()) continue;
    for (std::uint64_t cand : it->second) {
      if (same_prefix(sl, cand, sr, s, horizon)) {
        verdict.status = EqStatus::witness_found;
        verdict.witness = {State{cand, left.length()},
                           State{s, right.length()}};
        verdict.detail = "outputs agree for " + std::to_string(horizon) +
                         " steps from " + verdict.witness->first.to_string() +
                         " / " + verdict.witness->second.to_string();
        return verdict;
      }
    }
  }
  verdict.status = EqStatus::no_witness;
  verdict.detail = "no pair of initial states matches over " +
                   std::to_string(horizon) + " steps";
  return verdict;
}

EquivalenceVerdict window_check(const Nlfsr& left, const Nlfsr& right,
                                State s2, std::uint64_t window) {
  if (!left.is_fibonacci()) {
    throw std::invalid_argument(
        "window check seeds a Fibonacci register; the left register is not "
        "one");
  }
  if (s2.n != right.length()) {
    throw std::invalid_argument("state length does not match the register");
  }
  const unsigned n = left.length();
  if (window < 2 * n) {
    throw std::invalid_argument("window must cover at least 2n steps");
  }

  EquivalenceVerdict verdict;
  verdict.method = EqMethod::window;
  verdict.horizon = window;

  BitSequence o2 = output_sequence(right, s2, window);
  // n consecutive output bits of a Fibonacci register are its state content
  State s1{0, n};
  for (unsigned k = 0; k < n; ++k) {
    if (o2.bits[k]) s1.bits |= std::uint64_t{1} << k;
  }
  BitSequence o1 = output_sequence(left, s1, window);
  for (std::uint64_t t = 0; t < window; ++t) {
    if (o1.bits[t] != o2.bits[t]) {
      verdict.status = EqStatus::inconclusive;
      verdict.mismatch_at = t;
      verdict.detail = "outputs diverge at step " + std::to_string(t) +
                       " for the aligned states";
      return verdict;
    }
  }
  verdict.status = EqStatus::witness_found;
  verdict.witness = {s1, s2};
  verdict.detail = "outputs agree for " + std::to_string(window) +
                   " steps from " + s1.to_string() + " / " + s2.to_string();
  return verdict;
}

}  // namespace nlfsr
