#include "nlfsr/analysis.hpp"

#include <algorithm>
#include <bit>

namespace nlfsr {

RegisterMetrics metrics(const Nlfsr& r) {
  RegisterMetrics m;
  std::uint64_t vars = 1;  // x0 always feeds bit n-1 through the wrap line
  for (unsigned i = 0; i < r.length(); ++i) {
    const Anf& g = r.g(i);
    vars |= g.dep_mask();
    m.max_terms_per_function = std::max(m.max_terms_per_function,
                                        g.term_count());
    unsigned fanin =
        static_cast<unsigned>(std::popcount(r.feedback(i).dep_mask()));
    m.max_fanin = std::max(m.max_fanin, fanin);
    if (!g.is_zero()) ++m.nonpure_bits;
  }
  m.feedback_variables = Monomial::from_mask(vars).indices();
  m.feedback_variable_count =
      static_cast<unsigned>(m.feedback_variables.size());
  return m;
}

GolombReport golomb_check(const BitSequence& seq) {
  if (!seq.period) {
    throw std::invalid_argument("golomb check needs a sequence with a known "
                                "period");
  }
  const std::uint64_t t = *seq.period;
  if (t == 0 || seq.bits.size() < t) {
    throw std::invalid_argument("sequence shorter than its declared period");
  }

  GolombReport rep;
  for (std::uint64_t i = 0; i < t; ++i) {
    if (seq.bits[i]) {
      ++rep.ones;
    } else {
      ++rep.zeros;
    }
  }
  rep.postulate1_ok = rep.ones > 0 && rep.zeros > 0 &&
                      (rep.ones > rep.zeros ? rep.ones - rep.zeros
                                            : rep.zeros - rep.ones) <= 1;

  // circular runs over one period
  std::uint64_t start = t;
  for (std::uint64_t i = 0; i < t; ++i) {
    if (seq.bits[i] != seq.bits[(i + t - 1) % t]) {
      start = i;
      break;
    }
  }
  if (start == t) {
    // constant period: a single run
    rep.runs[t][seq.bits[0] ? 1 : 0] = 1;
    rep.total_runs = 1;
    rep.postulate2_ok = false;
    return rep;
  }
  std::uint64_t i = 0;
  while (i < t) {
    std::uint8_t symbol = seq.bits[(start + i) % t];
    std::uint64_t len = 0;
    while (i < t && seq.bits[(start + i) % t] == symbol) {
      ++i;
      ++len;
    }
    ++rep.runs[len][symbol];
    ++rep.total_runs;
  }

  bool ok = rep.total_runs >= 2;
  for (std::uint64_t len = 1; ok && (rep.total_runs >> len) >= 1; ++len) {
    std::uint64_t expected = rep.total_runs >> len;
    auto it = rep.runs.find(len);
    std::uint64_t c0 = it == rep.runs.end() ? 0 : it->second[0];
    std::uint64_t c1 = it == rep.runs.end() ? 0 : it->second[1];
    if (c0 + c1 != expected) ok = false;
    if (expected > 1 && c0 != c1) ok = false;
  }
  rep.postulate2_ok = ok;
  return rep;
}

PeriodCycleReport period_cycle_diagnostic(const Nlfsr& r, State s0,
                                          std::uint64_t step_budget) {
  PeriodInfo p = period(r, s0, step_budget);
  PeriodCycleReport rep;
  rep.state_period = p.state_period;
  rep.output_period = p.output_period;
  rep.diverged = p.output_period < p.state_period;
  rep.fibonacci_guarantee = r.is_fibonacci();
  return rep;
}

}  // namespace nlfsr
