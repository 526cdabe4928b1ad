#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/bn.hpp"
#include "cremona/error.hpp"
#include "cremona/jonq.hpp"
#include "cremona/moebius.hpp"
#include "cremona/mpoly.hpp"
#include "cremona/pgl2k.hpp"
#include "cremona/quadfield.hpp"
#include "cremona/ratfunc.hpp"

namespace cremona {

// Grammar, no implicit multiplication:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' '-'? integer)?
//   atom   := integer | identifier | '(' expr ')'
// Identifiers are looked up in `vars`; "λ" is read as "lambda".
using VarTable = std::map<std::string, int>;

// Errors: SyntaxError with a byte offset, ZeroDenominator.
MRat parse_multirat(std::string_view text, const VarTable& vars);

Rational parse_rational_expr(std::string_view text);
RatFunc parse_ratfunc(std::string_view text);  // in y
Poly parse_poly(std::string_view text);

// "[[a, b], [c, d]]" with entries in Q(y)
ProjMatK parse_projmat(std::string_view text);
// "(a, b, c, d)" or a degree-one expression in y
Moebius parse_moebius(std::string_view text);
// "jonq(A = [[..], [..]], m = (a, b, c, d))" or "(x_expr, y_expr)"
JonqElem parse_jonq(std::string_view text);
// "[F1 : F2 : F3]" in X, Y, Z
PlaneMap parse_plane_map(std::string_view text);
// "{0, 1, inf, roots(y^2 + 1)}"
Configuration parse_configuration(std::string_view text);
// "[[a, b], [c, d]]" over the given variables
std::array<MRat, 4> parse_matrix(std::string_view text, const VarTable& vars);
// "(f_1, ..., f_n)", f_i affine in x_i; "x" stands for x1 when n = 1.
TriangularElem parse_triangular(std::string_view text, int n);

// "p + q*sqrt(f)" as printed by QuadElem::to_string
QuadElem parse_quad(std::string_view text, const Integer& f);
VarTable y_vars();
VarTable bn_vars(int n);

}  // namespace cremona
