#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freecurve/tripoly.hpp"

namespace freecurve {

struct ParseDiagnostic {
  std::string message;
  std::size_t position = 0;       // byte offset into the input
  std::vector<std::string> expected;
};

struct ParseResult {
  std::optional<TriPoly> poly;
  std::optional<ParseDiagnostic> diagnostic;
  bool ok() const { return poly.has_value(); }
};

// Parses expressions like "(y*z+x^2)^2*y - x^5", "xyz(x^3+y^3+z^3)" or
// "1/2*x^2". Juxtaposition multiplies when a value is followed by '(' or a
// variable; '^' takes a non-negative integer exponent; 'p/q' between integer
// literals is a rational constant. Never throws: bad input yields a
// positioned diagnostic.
ParseResult parse_expression(std::string_view input);

}  // namespace freecurve
