#include "nlfsr/feedback_graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace nlfsr {

unsigned FeedbackGraph::in_degree(unsigned v) const {
  return static_cast<unsigned>(std::popcount(preds[v]));
}

FeedbackGraph build_graph(const Nlfsr& r) {
  FeedbackGraph g;
  g.n = r.length();
  g.preds.resize(g.n);
  for (unsigned j = 0; j < g.n; ++j) {
    g.preds[j] = r.feedback(j).dep_mask();
  }
  return g;
}

namespace {

ReducedGraph reduce_impl(const FeedbackGraph& g,
                         const SubstitutionChooser* pick) {
  std::vector<std::uint64_t> preds = g.preds;
  std::vector<std::uint64_t> merged(g.n);
  std::vector<bool> alive(g.n, true);
  for (unsigned i = 0; i < g.n; ++i) merged[i] = std::uint64_t{1} << i;

  for (;;) {
    std::vector<unsigned> candidates;
    for (unsigned v = 0; v < g.n; ++v) {
      if (alive[v] && std::popcount(preds[v]) == 1 &&
          preds[v] != (std::uint64_t{1} << v)) {
        candidates.push_back(v);
      }
    }
    if (candidates.empty()) break;
    unsigned v = pick ? (*pick)(candidates) : candidates.front();
    unsigned pred = static_cast<unsigned>(std::countr_zero(preds[v]));
    const std::uint64_t vbit = std::uint64_t{1} << v;
    const std::uint64_t pbit = std::uint64_t{1} << pred;
    for (unsigned k = 0; k < g.n; ++k) {
      if (alive[k] && k != v && (preds[k] & vbit)) {
        preds[k] = (preds[k] & ~vbit) | pbit;
      }
    }
    merged[pred] |= merged[v];
    alive[v] = false;
  }

  ReducedGraph out;
  for (unsigned v = 0; v < g.n; ++v) {
    if (!alive[v]) continue;
    out.vertices.push_back(v);
    out.preds[v] = preds[v];
    out.merged[v] = merged[v];
  }
  if (out.vertices.size() == 1) out.single_vertex = out.vertices.front();
  return out;
}

}  // namespace

ReducedGraph reduce_graph(const FeedbackGraph& g) {
  return reduce_impl(g, nullptr);
}

ReducedGraph reduce_graph(const FeedbackGraph& g,
                          const SubstitutionChooser& pick) {
  return reduce_impl(g, &pick);
}

ReducedGraph reduce_graph(const Nlfsr& r) {
  return reduce_graph(build_graph(r));
}

std::vector<std::uint64_t> ReducedGraph::quotient_vertices() const {
  std::vector<std::uint64_t> out;
  out.reserve(vertices.size());
  for (unsigned v : vertices) out.push_back(merged.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
ReducedGraph::quotient_edges() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (unsigned to : vertices) {
    std::uint64_t mask = preds.at(to);
    for (unsigned from : vertices) {
      if ((mask >> from) & 1) {
        out.emplace_back(merged.at(from), merged.at(to));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::string Tap::to_string() const {
  return "s" + std::to_string(bit) + "(t-" + std::to_string(delay) + ")";
}

std::string TapTerm::to_string() const {
  if (taps.empty()) return "1";
  std::string out;
  bool first = true;
  for (const Tap& t : taps) {
    if (!first) out += '*';
    out += t.to_string();
    first = false;
  }
  return out;
}

bool tap_term_less(const TapTerm& a, const TapTerm& b) {
  if (a.taps.size() != b.taps.size()) return a.taps.size() < b.taps.size();
  return a.taps < b.taps;
}

TapPoly TapPoly::from_terms(std::vector<TapTerm> terms) {
  for (TapTerm& t : terms) {
    std::sort(t.taps.begin(), t.taps.end());
    t.taps.erase(std::unique(t.taps.begin(), t.taps.end()), t.taps.end());
  }
  std::sort(terms.begin(), terms.end(), tap_term_less);
  std::vector<TapTerm> kept;
  kept.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) kept.push_back(std::move(terms[i]));
    i = j;
  }
  TapPoly p;
  p.terms_ = std::move(kept);
  return p;
}

TapPoly TapPoly::from_anf(const Anf& f, unsigned delay) {
  std::vector<TapTerm> terms;
  terms.reserve(f.term_count());
  for (Monomial m : f.terms()) {
    TapTerm t;
    for (unsigned i : m.indices()) t.taps.push_back(Tap{i, delay});
    terms.push_back(std::move(t));
  }
  return from_terms(std::move(terms));
}

std::uint64_t TapPoly::referenced_bits() const {
  std::uint64_t mask = 0;
  for (const TapTerm& t : terms_) {
    for (const Tap& tap : t.taps) mask |= std::uint64_t{1} << tap.bit;
  }
  return mask;
}

TapPoly TapPoly::operator^(const TapPoly& other) const {
  std::vector<TapTerm> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    if (terms_[i] == other.terms_[j]) {
      ++i;
      ++j;
    } else if (tap_term_less(terms_[i], other.terms_[j])) {
      out.push_back(terms_[i++]);
    } else {
      out.push_back(other.terms_[j++]);
    }
  }
  out.insert(out.end(), terms_.begin() + i, terms_.end());
  out.insert(out.end(), other.terms_.begin() + j, other.terms_.end());
  TapPoly p;
  p.terms_ = std::move(out);
  return p;
}

TapPoly TapPoly::mul(const TapPoly& a, const TapPoly& b,
                     std::size_t term_cap) {
  std::size_t pairs = a.terms_.size() * b.terms_.size();
  if (pairs > term_cap * 8) {
    throw CapacityError("equation product exceeds the term cap of " +
                        std::to_string(term_cap));
  }
  std::vector<TapTerm> out;
  out.reserve(pairs);
  for (const TapTerm& x : a.terms_) {
    for (const TapTerm& y : b.terms_) {
      TapTerm t;
      t.taps.reserve(x.taps.size() + y.taps.size());
      std::merge(x.taps.begin(), x.taps.end(), y.taps.begin(), y.taps.end(),
                 std::back_inserter(t.taps));
      // taps are idempotent: s*s = s
      t.taps.erase(std::unique(t.taps.begin(), t.taps.end()), t.taps.end());
      out.push_back(std::move(t));
    }
  }
  TapPoly p = from_terms(std::move(out));
  if (p.terms_.size() > term_cap) {
    throw CapacityError("equation grew to " + std::to_string(p.terms_.size()) +
                        " terms, above the cap of " + std::to_string(term_cap));
  }
  return p;
}

TapPoly TapPoly::delayed(unsigned extra, unsigned max_delay) const {
  TapPoly p = *this;
  for (TapTerm& t : p.terms_) {
    for (Tap& tap : t.taps) {
      tap.delay += extra;
      if (tap.delay > max_delay) {
        throw std::logic_error("delay " + std::to_string(tap.delay) +
                               " exceeds the register length bound");
      }
    }
  }
  return p;
}

TapPoly TapPoly::substitute_bit(unsigned bit, const TapPoly& replacement,
                                std::size_t term_cap,
                                unsigned max_delay) const {
  std::vector<TapTerm> untouched;
  TapPoly rewritten;
  for (const TapTerm& t : terms_) {
    std::vector<unsigned> delays;
    TapTerm rest;
    for (const Tap& tap : t.taps) {
      if (tap.bit == bit) {
        delays.push_back(tap.delay);
      } else {
        rest.taps.push_back(tap);
      }
    }
    if (delays.empty()) {
      untouched.push_back(t);
      continue;
    }
    TapPoly acc = from_terms({rest});
    for (unsigned d : delays) {
      acc = mul(acc, replacement.delayed(d, max_delay), term_cap);
    }
    rewritten = rewritten ^ acc;
  }
  return from_terms(std::move(untouched)) ^ rewritten;
}

std::string TapPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const TapTerm& t : terms_) {
    if (!first) out += " + ";
    out += t.to_string();
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

EquationSystem::EquationSystem(const Nlfsr& r, std::size_t term_cap)
    : n_(r.length()), term_cap_(term_cap) {
  for (unsigned i = 0; i < n_; ++i) {
    eqs_.emplace(i, TapPoly::from_anf(r.feedback(i), 1));
  }
}

std::vector<unsigned> EquationSystem::vertices() const {
  std::vector<unsigned> out;
  out.reserve(eqs_.size());
  for (const auto& [bit, poly] : eqs_) out.push_back(bit);
  return out;
}

const TapPoly& EquationSystem::equation(unsigned bit) const {
  auto it = eqs_.find(bit);
  if (it == eqs_.end()) {
    throw std::invalid_argument("bit " + std::to_string(bit) +
                                " is not part of the equation system");
  }
  return it->second;
}

std::uint64_t EquationSystem::referenced(unsigned bit) const {
  return equation(bit).referenced_bits();
}

bool EquationSystem::substitutable(unsigned bit) const {
  std::uint64_t refs = referenced(bit);
  return std::popcount(refs) == 1 && refs != (std::uint64_t{1} << bit);
}

void EquationSystem::substitute(unsigned bit) {
  std::uint64_t refs = referenced(bit);
  if (std::popcount(refs) != 1) {
    throw std::invalid_argument(
        "substitution requires a unique predecessor; bit " +
        std::to_string(bit) + " has in-degree " +
        std::to_string(std::popcount(refs)));
  }
  if (refs == (std::uint64_t{1} << bit)) {
    throw std::invalid_argument("bit " + std::to_string(bit) +
                                " depends only on itself and cannot be "
                                "substituted");
  }
  TapPoly replacement = eqs_.at(bit);
  eqs_.erase(bit);
  const std::uint64_t vbit = std::uint64_t{1} << bit;
  for (auto& [k, poly] : eqs_) {
    if (poly.referenced_bits() & vbit) {
      poly = poly.substitute_bit(bit, replacement, term_cap_, n_);
    }
  }
}

std::optional<unsigned> EquationSystem::sole_vertex() const {
  if (eqs_.size() != 1) return std::nullopt;
  return eqs_.begin()->first;
}

// ---------------------------------------------------------------------------

bool Recurrence::next(std::span<const std::uint8_t> history) const {
  std::uint64_t assignment = 0;
  for (unsigned k = 0; k < order && k < history.size(); ++k) {
    if (history[k]) assignment |= std::uint64_t{1} << k;
  }
  return terms.evaluate(assignment);
}

std::string Recurrence::to_string() const {
  std::string out = "s(t) = ";
  if (terms.is_zero()) return out + "0";
  bool first = true;
  for (Monomial m : terms.terms()) {
    if (!first) out += " + ";
    if (m.constant_one()) {
      out += "1";
    } else {
      bool inner_first = true;
      for (unsigned k : m.indices()) {
        if (!inner_first) out += '*';
        out += "s(t-" + std::to_string(k + 1) + ")";
        inner_first = false;
      }
    }
    first = false;
  }
  return out;
}

Recurrence derive_recurrence(const Nlfsr& r, unsigned bit,
                             std::size_t term_cap) {
  if (bit >= r.length()) {
    throw std::invalid_argument("bit " + std::to_string(bit) +
                                " out of range for register length " +
                                std::to_string(r.length()));
  }
  EquationSystem es(r, term_cap);
  for (;;) {
    auto vertices = es.vertices();
    if (vertices.size() == 1 && vertices.front() == bit) break;
    unsigned chosen = r.length();
    for (unsigned v : vertices) {
      if (v != bit && es.substitutable(v)) {
        chosen = v;
        break;
      }
    }
    if (chosen == r.length()) {
      throw NotDerivableError(
          "feedback graph does not reduce to bit " + std::to_string(bit) +
          "; " + std::to_string(vertices.size()) + " vertices remain");
    }
    es.substitute(chosen);
  }

  Recurrence rec;
  rec.bit = bit;
  rec.order = r.length();
  std::vector<Monomial> terms;
  for (const TapTerm& t : es.equation(bit).terms()) {
    std::uint64_t mask = 0;
    for (const Tap& tap : t.taps) {
      // all taps now refer to the requested bit with delays in 1..n
      mask |= std::uint64_t{1} << (tap.delay - 1);
    }
    terms.push_back(Monomial::from_mask(mask));
  }
  rec.terms = Anf::from_terms(std::move(terms));
  return rec;
}

std::ostream& operator<<(std::ostream& os, const Recurrence& rec) {
  return os << rec.to_string();
}

}  // namespace nlfsr
