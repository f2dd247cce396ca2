#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "nlfsr/register.hpp"

namespace nlfsr {

struct RegisterMetrics {
  // Variables feeding any g_i, plus x0, the wrap line into bit n-1.
  std::vector<unsigned> feedback_variables;
  unsigned feedback_variable_count = 0;
  std::size_t max_terms_per_function = 0;  // over the g_i
  unsigned max_fanin = 0;                  // largest |dep(f_i)|
  unsigned nonpure_bits = 0;               // bits with g_i != 0
};

RegisterMetrics metrics(const Nlfsr& r);

struct GolombReport {
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
  // run length -> {count of 0-runs, count of 1-runs}, circular over one period
  std::map<std::uint64_t, std::array<std::uint64_t, 2>> runs;
  std::uint64_t total_runs = 0;
  bool postulate1_ok = false;
  bool postulate2_ok = false;
};

// Balance and run-length checks over one period of the sequence (the period
// field must be set). Postulate 1: both symbols occur and their counts differ
// by at most one. Postulate 2: with R runs in the period, exactly R/2^k runs
// have length k for every k with R/2^k >= 1, split evenly between symbols
// whenever more than one; the longest runs fall outside that window and are
// unconstrained.
GolombReport golomb_check(const BitSequence& seq);

struct PeriodCycleReport {
  std::uint64_t state_period = 0;
  std::uint64_t output_period = 0;
  bool diverged = false;  // output period shorter than the state cycle
  // Fibonacci registers always have equal periods; flagged for the caller.
  bool fibonacci_guarantee = false;
};

PeriodCycleReport period_cycle_diagnostic(
    const Nlfsr& r, State s0, std::uint64_t step_budget = kDefaultStepBudget);

}  // namespace nlfsr
