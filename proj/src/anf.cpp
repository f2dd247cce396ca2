#include "nlfsr/anf.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

namespace nlfsr {

Monomial Monomial::of(std::initializer_list<unsigned> indices) {
  std::uint64_t mask = 0;
  for (unsigned i : indices) {
    if (i >= kMaxVars) {
      throw std::invalid_argument("variable index " + std::to_string(i) +
                                  " out of range (max " +
                                  std::to_string(kMaxVars - 1) + ")");
    }
    mask |= std::uint64_t{1} << i;
  }
  return from_mask(mask);
}

bool Monomial::contains(unsigned index) const {
  return index < kMaxVars && (mask_ >> index) & 1;
}

unsigned Monomial::degree() const {
  return static_cast<unsigned>(std::popcount(mask_));
}

std::optional<unsigned> Monomial::min_index() const {
  if (mask_ == 0) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(mask_));
}

std::optional<unsigned> Monomial::max_index() const {
  if (mask_ == 0) return std::nullopt;
  return static_cast<unsigned>(63 - std::countl_zero(mask_));
}

std::vector<unsigned> Monomial::indices() const {
  std::vector<unsigned> out;
  out.reserve(degree());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<unsigned>(std::countr_zero(m)));
  }
  return out;
}

Monomial Monomial::shifted(unsigned amount, unsigned n) const {
  if (n == 0 || n > kMaxVars || amount >= n) {
    throw std::invalid_argument("shift amount " + std::to_string(amount) +
                                " out of range for register length " +
                                std::to_string(n));
  }
  if (n < kMaxVars && (mask_ >> n) != 0) {
    throw std::invalid_argument("monomial " + to_string() +
                                " has an index >= register length " +
                                std::to_string(n));
  }
  std::uint64_t out = 0;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    unsigned i = static_cast<unsigned>(std::countr_zero(m));
    out |= std::uint64_t{1} << ((i + n - amount) % n);
  }
  return from_mask(out);
}

std::string Monomial::to_string() const {
  if (mask_ == 0) return "1";
  std::string out;
  bool first = true;
  for (unsigned i : indices()) {
    if (!first) out += '*';
    out += 'x';
    out += std::to_string(i);
    first = false;
  }
  return out;
}

bool monomial_less(Monomial a, Monomial b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  std::uint64_t x = a.mask();
  std::uint64_t y = b.mask();
  while (x != 0 && y != 0) {
    unsigned i = static_cast<unsigned>(std::countr_zero(x));
    unsigned j = static_cast<unsigned>(std::countr_zero(y));
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

Anf Anf::one() { return of({Monomial{}}); }

Anf Anf::var(unsigned index) { return of({Monomial::of({index})}); }

Anf Anf::of(std::initializer_list<Monomial> terms) {
  return from_terms(std::vector<Monomial>(terms));
}

Anf Anf::of_indices(
    std::initializer_list<std::initializer_list<unsigned>> terms) {
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(Monomial::of(t));
  return from_terms(std::move(out));
}

Anf Anf::from_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), monomial_less);
  // XOR semantics: pairs of equal terms cancel.
  std::vector<Monomial> kept;
  kept.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) kept.push_back(terms[i]);
    i = j;
  }
  Anf f;
  f.terms_ = std::move(kept);
  return f;
}

bool Anf::is_one() const {
  return terms_.size() == 1 && terms_[0].constant_one();
}

bool Anf::contains(Monomial m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, monomial_less);
}

bool Anf::evaluate(std::uint64_t assignment) const {
  bool value = false;
  for (Monomial t : terms_) value ^= t.evaluate(assignment);
  return value;
}

std::uint64_t Anf::dep_mask() const {
  std::uint64_t mask = 0;
  for (Monomial t : terms_) mask |= t.mask();
  return mask;
}

std::vector<unsigned> Anf::dep() const {
  return Monomial::from_mask(dep_mask()).indices();
}

std::optional<unsigned> Anf::alpha_min() const {
  return Monomial::from_mask(dep_mask()).min_index();
}

std::optional<unsigned> Anf::alpha_max() const {
  return Monomial::from_mask(dep_mask()).max_index();
}

Anf Anf::operator^(const Anf& other) const {
  // Symmetric difference of two sorted term lists.
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    if (terms_[i] == other.terms_[j]) {
      ++i;
      ++j;
    } else if (monomial_less(terms_[i], other.terms_[j])) {
      out.push_back(terms_[i++]);
    } else {
      out.push_back(other.terms_[j++]);
    }
  }
  out.insert(out.end(), terms_.begin() + i, terms_.end());
  out.insert(out.end(), other.terms_.begin() + j, other.terms_.end());
  Anf f;
  f.terms_ = std::move(out);
  return f;
}

Anf& Anf::operator^=(const Anf& other) {
  *this = *this ^ other;
  return *this;
}

Anf Anf::operator*(const Anf& other) const {
  return mul(*this, other, kDefaultTermCap);
}

Anf Anf::substitute(unsigned index, const Anf& replacement) const {
  return nlfsr::substitute(*this, index, replacement, kDefaultTermCap);
}

std::string Anf::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (Monomial t : terms_) {
    if (!first) out += " + ";
    out += t.to_string();
    first = false;
  }
  return out;
}

Anf mul(const Anf& a, const Anf& b, std::size_t term_cap) {
  std::size_t pairs = a.term_count() * b.term_count();
  if (pairs > term_cap * 8) {
    throw CapacityError("product of " + std::to_string(a.term_count()) +
                        " x " + std::to_string(b.term_count()) +
                        " terms exceeds the term cap of " +
                        std::to_string(term_cap));
  }
  std::vector<Monomial> out;
  out.reserve(pairs);
  for (Monomial x : a.terms()) {
    for (Monomial y : b.terms()) out.push_back(x * y);
  }
  Anf result = Anf::from_terms(std::move(out));
  if (result.term_count() > term_cap) {
    throw CapacityError("product has " + std::to_string(result.term_count()) +
                        " terms, above the cap of " + std::to_string(term_cap));
  }
  return result;
}

Anf substitute(const Anf& f, unsigned index, const Anf& replacement,
               std::size_t term_cap) {
  if (index >= kMaxVars) {
    throw std::invalid_argument("variable index " + std::to_string(index) +
                                " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << index;
  std::vector<Monomial> rest;
  std::vector<Monomial> with;  // terms containing x_index, with it removed
  for (Monomial t : f.terms()) {
    if (t.mask() & bit) {
      with.push_back(Monomial::from_mask(t.mask() & ~bit));
    } else {
      rest.push_back(t);
    }
  }
  if (with.empty()) return f;
  Anf cofactor = Anf::from_terms(std::move(with));
  Anf result = Anf::from_terms(std::move(rest)) ^
               mul(replacement, cofactor, term_cap);
  if (result.term_count() > term_cap) {
    throw CapacityError("substitution result has " +
                        std::to_string(result.term_count()) +
                        " terms, above the cap of " + std::to_string(term_cap));
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << m.to_string();
}

std::ostream& operator<<(std::ostream& os, const Anf& f) {
  return os << f.to_string();
}

}  // namespace nlfsr
