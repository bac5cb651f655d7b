#pragma once

#include <string_view>

#include "qorbit/exact_state.hpp"

namespace qorbit {

// Parses a linear combination of computational kets into a canonical state.
//
// Grammar (whitespace ignored):
//   expr    := [coeff] '(' terms ')' | terms
//   terms   := term (('+'|'-') term)*
//   term    := ['-'] [coeff] ket
//   ket     := '|' [01]{4} '>'
//   coeff   := '1' | 'i' | '1/2' | 'i/2' | '1/sqrt2' | 'i/sqrt2'
//            | '1/(2sqrt2)' | 'i/(2sqrt2)'   (optionally parenthesized)
//
// Examples: "|0000>", "(1/sqrt2)(|1110> - |1101>)",
//           "1/2(|1111>+|1100>-|0011>-|0000>)".
//
// The ket string is read as a binary number (qubit 1 rightmost). Throws
// ParseError on bad syntax and NormalizationViolation if the result is not
// a unit vector over the Gaussian-integer / sqrt2 ring.
ExactState parse_ket_expr(std::string_view text);

}  // namespace qorbit
