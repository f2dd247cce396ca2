#include "nlfsr/register.hpp"

#include <algorithm>
#include <ostream>

namespace nlfsr {

std::string State::to_string() const {
  std::string out(n, '0');
  for (unsigned i = 0; i < n; ++i) {
    if (bit(i)) out[n - 1 - i] = '1';
  }
  return out;
}

State State::parse(std::string_view text, unsigned n) {
  if (n == 0 || n > kMaxLength) {
    throw std::invalid_argument("state length out of range");
  }
  State s{0, n};
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::uint64_t value = 0;
    for (char c : text.substr(2)) {
      unsigned digit;
      if (c >= '0' && c <= '9') {
        digit = static_cast<unsigned>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        digit = static_cast<unsigned>(c - 'a') + 10;
      } else if (c >= 'A' && c <= 'F') {
        digit = static_cast<unsigned>(c - 'A') + 10;
      } else {
        throw std::invalid_argument(std::string("bad hex digit '") + c +
                                    "' in state");
      }
      if (value >> 60 != 0) throw std::invalid_argument("state value too wide");
      value = (value << 4) | digit;
    }
    if (n < 64 && (value >> n) != 0) {
      throw std::invalid_argument("state value does not fit in " +
                                  std::to_string(n) + " bits");
    }
    s.bits = value;
    return s;
  }
  if (text.size() != n) {
    throw std::invalid_argument("state must have exactly " +
                                std::to_string(n) + " binary digits");
  }
  for (unsigned i = 0; i < n; ++i) {
    char c = text[n - 1 - i];
    if (c == '1') {
      s.bits |= std::uint64_t{1} << i;
    } else if (c != '0') {
      throw std::invalid_argument(std::string("bad state digit '") + c + "'");
    }
  }
  return s;
}

std::string BitSequence::to_string() const {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i] = '1';
  }
  return out;
}

Nlfsr Nlfsr::make(unsigned n, std::vector<Anf> g) {
  if (n < kMinLength || n > kMaxLength) {
    throw std::invalid_argument("register length " + std::to_string(n) +
                                " out of range [" +
                                std::to_string(kMinLength) + ", " +
                                std::to_string(kMaxLength) + "]");
  }
  if (g.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " feedback functions, got " +
                                std::to_string(g.size()));
  }
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t deps = g[i].dep_mask();
    if (n < kMaxVars && (deps >> n) != 0) {
      throw std::invalid_argument(
          "g" + std::to_string(i) + " uses a variable index >= " +
          std::to_string(n));
    }
    unsigned tap = (i + 1) % n;
    if ((deps >> tap) & 1) {
      throw SingularityError(
          i, tap,
          "g" + std::to_string(i) + " depends on its shift tap x" +
              std::to_string(tap) + " (singularity violation at bit " +
              std::to_string(i) + ")");
    }
  }
  return Nlfsr(n, std::move(g));
}

Anf Nlfsr::feedback(unsigned i) const {
  return Anf::var(shift_tap(i)) ^ g_[i];
}

bool Nlfsr::is_pure_shift() const {
  return std::all_of(g_.begin(), g_.end(),
                     [](const Anf& f) { return f.is_zero(); });
}

bool Nlfsr::is_fibonacci() const {
  for (unsigned i = 0; i + 1 < n_; ++i) {
    if (!g_[i].is_zero()) return false;
  }
  return true;
}

namespace detail {

Stepper::Stepper(const Nlfsr& r) : n(r.length()) {
  bits.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    BitFn f;
    f.tap = r.shift_tap(i);
    for (Monomial t : r.g(i).terms()) f.term_masks.push_back(t.mask());
    bits.push_back(std::move(f));
  }
}

}  // namespace detail

State step(const Nlfsr& r, State s) {
  if (s.n != r.length()) {
    throw std::invalid_argument("state length does not match the register");
  }
  detail::Stepper stepper(r);
  return State{stepper.step(s.bits), r.length()};
}

BitSequence output_sequence(const Nlfsr& r, State s0, std::uint64_t count) {
  if (s0.n != r.length()) {
    throw std::invalid_argument("state length does not match the register");
  }
  if (count < 1) throw std::invalid_argument("step count must be >= 1");
  detail::Stepper stepper(r);
  BitSequence seq;
  seq.bits.reserve(count);
  std::uint64_t s = s0.bits;
  for (std::uint64_t t = 0; t < count; ++t) {
    seq.bits.push_back(static_cast<std::uint8_t>(s & 1));
    s = stepper.step(s);
  }
  return seq;
}

namespace {

// Smallest cyclic period of one full period worth of bits.
std::uint64_t cyclic_period(const std::vector<std::uint8_t>& bits) {
  const std::uint64_t t = bits.size();
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= t; ++d) {
    if (t % d != 0) continue;
    divisors.push_back(d);
    if (d != t / d) divisors.push_back(t / d);
  }
  std::sort(divisors.begin(), divisors.end());
  for (std::uint64_t d : divisors) {
    bool ok = true;
    for (std::uint64_t i = d; i < t && ok; ++i) {
      ok = bits[i] == bits[i - d];
    }
    if (ok) return d;
  }
  return t;
}

}  // namespace

PeriodInfo period(const Nlfsr& r, State s0, std::uint64_t step_budget) {
  if (s0.n != r.length()) {
    throw std::invalid_argument("state length does not match the register");
  }
  detail::Stepper stepper(r);
  std::vector<std::uint8_t> outputs;
  std::uint64_t s = s0.bits;
  std::uint64_t t = 0;
  do {
    if (t >= step_budget) {
      throw ResourceError("period detection exceeded the step budget of " +
                          std::to_string(step_budget));
    }
    outputs.push_back(static_cast<std::uint8_t>(s & 1));
    s = stepper.step(s);
    ++t;
  } while (s != s0.bits);
  return PeriodInfo{t, cyclic_period(outputs)};
}

std::vector<Cycle> state_cycles(const Nlfsr& r, unsigned max_bits) {
  const unsigned n = r.length();
  if (n > max_bits) {
    throw ResourceError("state-cycle enumeration limited to " +
                        std::to_string(max_bits) + " bits, register has " +
                        std::to_string(n));
  }
  detail::Stepper stepper(r);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> visited(total, false);
  std::vector<Cycle> cycles;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    std::uint64_t len = 0;
    std::uint64_t s = start;
    do {
      visited[s] = true;
      s = stepper.step(s);
      ++len;
    } while (s != start);
    cycles.push_back(Cycle{len, State{start, n}});
  }
  return cycles;
}

std::ostream& operator<<(std::ostream& os, const State& s) {
  return os << s.to_string();
}

}  // namespace nlfsr
