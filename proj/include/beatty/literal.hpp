#pragma once

#include <string_view>

#include "beatty/exact_real.hpp"

namespace beatty {

// Exact-real literal grammar shared by the CLI, JSON interchange and test
// fixtures:
//
//   rational := int | int "/" posint
//   real     := rational
//             | rational sign rational "*sqrt(" posint ")"
//             | rational "*sqrt(" posint ")"
//
// Whitespace is ignored.  Decimal literals are rejected: every accepted
// number is exact.  Throws ParseError (with offset) or RadicandNotSquarefree.
ExactReal parse_real(std::string_view text);

Rational parse_rational(std::string_view text);

}  // namespace beatty
