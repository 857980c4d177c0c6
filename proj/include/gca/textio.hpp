#pragma once

// Canonical text forms for polynomials and fractions, plus a small parser for
// the same syntax.  Printing is deterministic: terms appear in ascending
// graded-lex order, variables within a term in VarId order.

#include <string>

#include "gca/poly.hpp"
#include "gca/util.hpp"

namespace gca {

std::string var_name(VarId v);
// Inverse of var_name; throws ParseError on anything else.
VarId parse_var(const std::string& name);

std::string to_string(const Monomial& m);
// plus_sign lets semifield values print with an explicit oplus symbol; the
// default renders ordinary integer polynomials (with proper minus handling).
std::string to_string(const LaurentPoly& p, const std::string& plus_sign = " + ");
std::string to_string(const RatFunc& f);
std::string to_string(const IntMat& m);

// Sum-of-terms syntax: "1 + 3*y2 + y1^3 - 2*x1^-1*z1_2".  No parentheses.
LaurentPoly parse_poly(const std::string& text);
// Accepts "p" or "p / q" at top level.
RatFunc parse_ratfunc(const std::string& text);

}  // namespace gca
