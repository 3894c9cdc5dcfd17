#pragma once

#include <string>

#include "hsg/vecpoly.hpp"

namespace hsg {

// Parses the documented expression grammar: integer literals, variable
// identifiers, + - * ^ and parentheses; whitespace is insignificant.
// Returns a canonical rank-1 element.  Syntax errors carry the 1-based
// character position.
VecPoly parse_polynomial(const std::string& text, const Context& ctx);

} // namespace hsg
