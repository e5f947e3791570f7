#pragma once

#include <string_view>

#include "famloc/polynomial.hpp"

namespace famloc {

/// Parses a polynomial expression over `ring`: sums, products, integer
/// powers with '^', parentheses, unary minus, and rational constants
/// (division only by constants). Throws ParseError with positions relative to
/// `line` and `column`.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line = 1,
                            std::size_t column = 1);

}  // namespace famloc
