#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nlfsr/errors.hpp"

namespace nlfsr {

// Variable indices live in 0..63 so a product-term fits one machine word.
inline constexpr unsigned kMaxVars = 64;

// Hard ceiling on the number of product-terms a product or substitution may
// produce. Exceeding it raises CapacityError, never silent truncation.
inline constexpr std::size_t kDefaultTermCap = std::size_t{1} << 20;

// One ANF product-term: a set of variable indices, AND-ed together.
// The empty set is the constant 1.
class Monomial {
 public:
  constexpr Monomial() = default;  // constant 1

  static Monomial of(std::initializer_list<unsigned> indices);
  static constexpr Monomial from_mask(std::uint64_t mask) {
    Monomial m;
    m.mask_ = mask;
    return m;
  }

  std::uint64_t mask() const { return mask_; }
  bool constant_one() const { return mask_ == 0; }
  bool contains(unsigned index) const;
  unsigned degree() const;
  std::optional<unsigned> min_index() const;  // nullopt for the constant
  std::optional<unsigned> max_index() const;
  std::vector<unsigned> indices() const;  // ascending

  // Index i becomes (i - amount) mod n. Requires 0 <= amount < n and every
  // index of the term below n.
  Monomial shifted(unsigned amount, unsigned n) const;

  // AND over GF(2): union of index sets (x*x = x).
  Monomial operator*(Monomial other) const {
    return from_mask(mask_ | other.mask_);
  }

  // Value under an assignment given as a bitmask (bit i = value of x_i).
  bool evaluate(std::uint64_t assignment) const {
    return (assignment & mask_) == mask_;
  }

  bool operator==(const Monomial&) const = default;

  std::string to_string() const;  // "x1*x3", "1"

 private:
  std::uint64_t mask_ = 0;
};

// Canonical term order used everywhere: degree first, then lexicographic on
// the ascending index sequence.
bool monomial_less(Monomial a, Monomial b);

// A polynomial over GF(2) in algebraic normal form: a set of product-terms,
// XOR-ed together. Terms are kept sorted and duplicate-free (XOR cancellation
// is applied on construction). The empty set is the constant 0.
class Anf {
 public:
  Anf() = default;  // constant 0

  static Anf zero() { return Anf{}; }
  static Anf one();
  static Anf var(unsigned index);
  static Anf of(std::initializer_list<Monomial> terms);
  static Anf of_indices(
      std::initializer_list<std::initializer_list<unsigned>> terms);
  // Canonicalizes: sorts and cancels duplicate pairs.
  static Anf from_terms(std::vector<Monomial> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool contains(Monomial m) const;

  bool evaluate(std::uint64_t assignment) const;

  // Dependence set. ANF canonicity makes the syntactic support exact.
  std::uint64_t dep_mask() const;
  std::vector<unsigned> dep() const;
  std::optional<unsigned> alpha_min() const;  // nullopt for constants
  std::optional<unsigned> alpha_max() const;

  Anf operator^(const Anf& other) const;
  Anf& operator^=(const Anf& other);
  Anf operator*(const Anf& other) const;  // uses kDefaultTermCap

  // Replaces every occurrence of x_index by `replacement`, re-expanded and
  // canonicalized.
  Anf substitute(unsigned index, const Anf& replacement) const;

  bool operator==(const Anf&) const = default;

  std::string to_string() const;  // "x0 + x1 + x1*x3", "0", "1"

 private:
  std::vector<Monomial> terms_;
};

Anf mul(const Anf& a, const Anf& b, std::size_t term_cap);
Anf substitute(const Anf& f, unsigned index, const Anf& replacement,
               std::size_t term_cap);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Anf& f);

}  // namespace nlfsr
