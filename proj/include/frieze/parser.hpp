#pragma once

#include <string>

#include "frieze/rational_function.hpp"

namespace frieze {

// Parses the polynomial text syntax into a canonical rational function.
// Throws ParseError (with position), InvalidInput for variables out of range,
// DivisionByZero for division by the zero polynomial.
RationalFunction parse_rational_function(const std::string& text, int nvars);

}  // namespace frieze
