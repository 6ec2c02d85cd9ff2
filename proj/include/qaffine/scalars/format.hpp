#pragma once

#include <string>
#include <string_view>

#include "qaffine/scalars/ratfunc.hpp"

namespace qaffine {

// Polynomial string grammar:
//   poly := ["-"] term { ("+" | "-") term }
//   term := coeff { "*" var "^" int }
// The printer always emits the coefficient and an explicit exponent for every
// variable with nonzero exponent, terms in canonical order, e.g.
// "3*t^-2*z^1 - 1". The parser also accepts bare variables, omitted
// coefficients and omitted "^1", and registers unknown variable names.
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_poly(std::string_view text);

// Rational functions print as the numerator alone when the denominator is 1,
// otherwise as "(num)/(den)". The parser accepts either form.
std::string to_string(const RatFunc& r);
RatFunc parse_ratfunc(std::string_view text);

}  // namespace qaffine
