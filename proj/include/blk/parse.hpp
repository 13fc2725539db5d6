#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "blk/poly.hpp"

namespace blk {

struct ParsedPoly {
  Poly f;
  std::vector<std::string> names;  // order of first appearance
};

// Polynomial with rational coefficients in + - * ^ and parentheses; division
// only by constants. Throws SyntaxError (with position) on malformed input.
ParsedPoly parse_poly(std::string_view src);

// Throws NotSingular unless f(0) = 0 and f has no linear part.
void require_singular(const ParsedPoly& p);

}  // namespace blk
