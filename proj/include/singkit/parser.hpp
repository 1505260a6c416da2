#pragma once

// Text form of polynomials.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | identifier | '(' expr ')' | '-' factor
//
// Rational literals are "3" or "3/2". Multiplication is always explicit,
// so "2x" is rejected and "z10" is a single identifier.

#include <string>
#include <string_view>

#include "singkit/poly.hpp"

namespace singkit {

// Throws ParseError (1-based line/column into `text`) on syntax errors,
// unknown variables and negative exponents.
Polynomial parse_expression(std::string_view text, const Ring& ring);

// Canonical form: terms by descending total degree, then descending
// lexicographic exponent vector; "0" for the zero polynomial.
std::string format_polynomial(const Polynomial& p);

std::string format_monomial(const Monomial& m, const Ring& ring);

}  // namespace singkit
