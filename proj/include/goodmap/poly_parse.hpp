#pragma once

#include <string>
#include <vector>

#include "goodmap/polynomial.hpp"

namespace goodmap {

// Parses the CLI polynomial grammar over the given variable names:
//   poly   := ['-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := coeff | var ['^' nat] | '(' poly ')'
//   coeff  := integer ['/' integer]
// Throws ParseError with 1-based line/column on malformed input.
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);

std::vector<Poly> parse_polys(const std::vector<std::string>& texts,
                              const std::vector<std::string>& names);

}  // namespace goodmap
