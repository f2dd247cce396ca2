#include "nlfsr/transform.hpp"

#include <ostream>

namespace nlfsr {

unsigned terminal_bit(const Nlfsr& r) {
  for (unsigned i = 0; i < r.length(); ++i) {
    if (!r.g(i).is_zero()) return i;
  }
  return r.length() - 1;
}

UniformityReport uniformity(const Nlfsr& r) {
  UniformityReport rep;
  rep.terminal = terminal_bit(r);
  for (unsigned i = rep.terminal + 1; i < r.length(); ++i) {
    auto amax = r.g(i).alpha_max();
    if (amax && *amax > rep.terminal) {
      rep.uniform = false;
      rep.violating_bit = i;
      rep.violating_var = *amax;
      return rep;
    }
  }
  rep.uniform = true;
  return rep;
}

bool is_uniform(const Nlfsr& r) { return uniformity(r).uniform; }

std::string ShiftMove::to_string() const {
  return term.to_string() + ": g" + std::to_string(from) + " -> g" +
         std::to_string(to);
}

namespace {

void check_move_shape(const Nlfsr& r, const ShiftMove& m) {
  if (m.from >= r.length() || m.to >= r.length()) {
    throw std::invalid_argument("shift move " + m.to_string() +
                                " out of range for register length " +
                                std::to_string(r.length()));
  }
  if (m.to >= m.from) {
    throw std::invalid_argument("shift move " + m.to_string() +
                                " must target a lower function (b < a)");
  }
}

bool no_wrap(const ShiftMove& m) {
  // b >= a - alpha_min(p): shifted indices never wrap past x0
  auto amin = m.term.min_index();
  return amin && m.to + *amin >= m.from;
}

Nlfsr apply_unchecked(const Nlfsr& r, const ShiftMove& m) {
  std::vector<Anf> g = r.functions();
  g[m.from] ^= Anf::of({m.term});
  g[m.to] ^= Anf::of({m.term.shifted(m.from - m.to, r.length())});
  return Nlfsr::make(r.length(), std::move(g));
}

}  // namespace

ShiftCheck can_shift_preserving(const Nlfsr& r, const ShiftMove& m) {
  check_move_shape(r, m);
  if (!r.g(m.from).contains(m.term)) {
    return {false, "term " + m.term.to_string() + " is not in g" +
                       std::to_string(m.from)};
  }
  if (m.term.constant_one()) {
    return {false, "the constant term is never shifted"};
  }
  UniformityReport u = uniformity(r);
  if (!u.uniform) {
    return {false, "source register is not uniform (bit " +
                       std::to_string(*u.violating_bit) + " reads x" +
                       std::to_string(*u.violating_var) + ")"};
  }
  if (!no_wrap(m)) {
    return {false, "b >= a - alpha_min(p) fails (" + std::to_string(m.to) +
                       " < " + std::to_string(m.from) + " - " +
                       std::to_string(*m.term.min_index()) + ")"};
  }
  if (m.to >= u.terminal) return {true, {}};  // destination at/above terminal
  // Destination below the terminal bit: every function from the destination
  // upward must stay within the destination index once the move is applied.
  Nlfsr after = apply_unchecked(r, m);
  for (unsigned i = m.to; i < r.length(); ++i) {
    auto amax = after.g(i).alpha_max();
    if (amax && *amax > m.to) {
      return {false, "alpha_max(g" + std::to_string(i) + ") = " +
                         std::to_string(*amax) + " exceeds the destination " +
                         std::to_string(m.to) + " after the move"};
    }
  }
  return {true, {}};
}

Nlfsr apply_shift(const Nlfsr& r, const ShiftMove& m, ShiftGuard guard) {
  check_move_shape(r, m);
  if (!r.g(m.from).contains(m.term)) {
    throw ShiftRejectedError("term " + m.term.to_string() + " is not in g" +
                             std::to_string(m.from));
  }
  if (m.term.constant_one()) {
    throw ShiftRejectedError("the constant term is never shifted");
  }
  if (guard == ShiftGuard::theorem2 && !no_wrap(m)) {
    throw ShiftRejectedError(
        "move " + m.to_string() + " rejected: b >= a - alpha_min(p) fails (" +
        std::to_string(m.to) + " < " + std::to_string(m.from) + " - " +
        std::to_string(*m.term.min_index()) + ")");
  }
  if (guard == ShiftGuard::lemma3) {
    ShiftCheck check = can_shift_preserving(r, m);
    if (!check.allowed) {
      throw ShiftRejectedError("move " + m.to_string() +
                               " rejected: " + check.reason);
    }
  }
  return apply_unchecked(r, m);
}

std::pair<Nlfsr, TransformReport> fully_shift(const Nlfsr& r) {
  const unsigned n = r.length();
  if (terminal_bit(r) != n - 1) {
    throw std::invalid_argument(
        "fully_shift expects a Fibonacci register (terminal bit n-1), got "
        "terminal bit " +
        std::to_string(terminal_bit(r)));
  }

  TransformReport report;
  report.tau_before = n - 1;
  report.uniform_before = true;  // every Fibonacci register is uniform

  unsigned tau = 0;
  for (Monomial p : r.g(n - 1).terms()) {
    if (p.degree() > 1) {
      tau = std::max(tau, *p.max_index() - *p.min_index());
    }
  }
  report.algorithm_tau = tau;

  Nlfsr out = r;
  for (Monomial p : r.g(n - 1).terms()) {
    if (p.degree() == 0) continue;  // the constant stays in g_{n-1}
    unsigned amin = *p.min_index();
    unsigned dest = amin <= (n - 1) - tau ? (n - 1) - amin : tau;
    ShiftMove move{n - 1, dest, p};
    out = apply_shift(out, move, ShiftGuard::raw);
    report.moves.push_back(move);
  }

  report.tau_after = terminal_bit(out);
  report.uniform_after = is_uniform(out);
  return {std::move(out), std::move(report)};
}

FullyShiftedReport fully_shifted_status(const Nlfsr& r) {
  for (unsigned from = 0; from < r.length(); ++from) {
    for (Monomial p : r.g(from).terms()) {
      if (p.degree() == 0) continue;
      unsigned amin = *p.min_index();
      unsigned lowest = from > amin ? from - amin : 0;
      for (unsigned to = from; to-- > lowest;) {
        Nlfsr after = apply_unchecked(r, ShiftMove{from, to, p});
        if (is_uniform(after)) {
          return {false, ShiftMove{from, to, p}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool is_fully_shifted(const Nlfsr& r) {
  return fully_shifted_status(r).fully_shifted;
}

std::ostream& operator<<(std::ostream& os, const ShiftMove& m) {
  return os << m.to_string();
}

}  // namespace nlfsr
