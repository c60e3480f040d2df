#ifndef MWPLET_TEXTFORM_HPP
#define MWPLET_TEXTFORM_HPP

#include <string>
#include <vector>

#include "mpoly.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"

namespace mwplet {

// Exact rendering: rational coefficients kept as they are, terms in
// graded-lex order, radicals printed as sqrt(d).
std::string fieldelem_string(const FieldElem& e);
std::string mpoly_string(const MPoly& p);
std::string poly_string(const Poly& p);
std::string ratfunc_string(const RatFunc& r);

// Canonical golden form: integer-cleared, content-normalized, graded-lex,
// leading coefficient positive. This is the CLI/golden-file contract.
std::string canonical_string(const MPoly& p);
std::string canonical_string(const Poly& p);

// Recursive-descent parser for +,-,*,/,^, sqrt(int), integers and the given
// variable names. Division is tracked as an exact fraction while parsing.
MPoly parse_mpoly(const std::string& text, const std::vector<std::string>& vars);
RatFunc parse_ratfunc(const std::string& text, const std::string& var = "t");
FieldElem parse_fieldelem(const std::string& text);

// "(x_expr, y_expr)" with a top-level comma
std::pair<std::string, std::string> split_pair(const std::string& text);

} // namespace mwplet

#endif
