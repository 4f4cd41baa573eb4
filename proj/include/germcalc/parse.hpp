#ifndef GERMCALC_PARSE_HPP
#define GERMCALC_PARSE_HPP

#include <string>
#include <string_view>

#include "germcalc/poly.hpp"

namespace germcalc {

// Grammar: sums/differences of products of powers.
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ('^' natural)?
//   atom   := natural | identifier | '(' expr ')'
// Multiplication is always explicit ("2*x", never "2x"); '^' does not chain.
Polynomial parse_polynomial(RingPtr ring, std::string_view text);

// Canonical text form: terms in descending ring order, coefficients as least
// nonnegative residues, "x^2*y" style factors, "0" for the zero polynomial.
std::string format_polynomial(const Polynomial& f);

std::string format_monomial(const PolyRing& ring, const Monomial& m);

}  // namespace germcalc

#endif
