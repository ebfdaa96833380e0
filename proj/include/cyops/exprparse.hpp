#pragma once

// Recursive-descent parser for the operator-record polynomial grammar and
// the CLI's Laurent expressions: integers, rationals p/q, variables,
// + - * / ^ ( ), unary minus, ^ binding tightest. Division is by a single
// term only (a rational constant or a monomial), which is what keeps the
// result a Laurent polynomial.

#include <string>
#include <vector>

#include "cyops/laurent.hpp"
#include "cyops/ratpoly.hpp"

namespace cyops {

// Variable names appearing in the text, in order of first appearance.
std::vector<std::string> scan_variables(const std::string& text);

// Parse with a fixed variable list (dimension = vars.size()); unknown
// identifiers raise ParseError.
LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& vars,
                          int first_line = 1, int first_column = 1);

// Univariate polynomial in T with nonnegative exponents.
RatPoly parse_poly(const std::string& text, int first_line = 1, int first_column = 1);

}  // namespace cyops
