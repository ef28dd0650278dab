#pragma once

#include <string>

#include "gml/ratfun.hpp"

namespace gml {

// Polynomial text syntax: integer (or n/d rational) coefficients,
// `^` for powers, `*` optional, identifiers as variables, parentheses.
// parse_poly rejects expressions with a nontrivial denominator.
Poly parse_poly(const std::string& text, const Ring& ring);
RatFun parse_ratfun(const std::string& text, const Ring& ring);

} // namespace gml
