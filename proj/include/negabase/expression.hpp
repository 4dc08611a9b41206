#pragma once

#include <string_view>

#include "negabase/algebraic.hpp"

namespace negabase {

/// "p/q", "-3", "0.125".
Rational parse_rational(std::string_view text);

/// Polynomial in `var` with rational coefficients: "x^3-2x^2-1", "2x - 3".
/// Accepts +, -, *, ^ (nonnegative integer exponents), parentheses, and
/// implicit multiplication.
Polynomial parse_polynomial(std::string_view text, char var = 'x');

/// Element of Q(beta) written in the symbol `var`: "-b/(b+1)", "b^4", "3/2".
/// Division and negative exponents are allowed here.
AlgReal parse_element(const NumberField& field, std::string_view text, char var = 'b');

}  // namespace negabase
