#pragma once

#include <string>
#include <string_view>

#include "nlfsr/register.hpp"

namespace nlfsr {

// Register spec text:
//
//   # comment
//   n=4
//   f3 = x0 + x1 + x2 + x1*x3
//
// One feedback line per non-pure bit giving the full function f_i; '+' is
// XOR, '*' is AND, '1' the constant term, whitespace free-form. Omitted bits
// default to the pure shift f_i = x_{(i+1) mod n}.
Nlfsr parse_spec(std::string_view text);

// Inverse of parse_spec: parse_spec(format_spec(r)) == r. Bits are printed in
// descending order; terms by degree, then lexicographic index order.
std::string format_spec(const Nlfsr& r);

// A single product-term such as "x1*x3" or "1"; used by the shift command.
Monomial parse_monomial(std::string_view text, unsigned n);

// An ANF expression such as "x0 + x1*x3".
Anf parse_anf(std::string_view text, unsigned n);

}  // namespace nlfsr
