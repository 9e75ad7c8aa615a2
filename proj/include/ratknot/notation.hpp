#pragma once

// Text forms accepted on the command line:
//   [a1,a2,...,an]   terms separated by commas and/or spaces
//   p/q              reduced on parse; q may be negative
//   n                the fraction n/1
//   inf              the formal 1/0

#include <string>
#include <string_view>
#include <variant>

#include "ratknot/contfrac.hpp"

namespace ratknot {

using Notation = std::variant<ContinuedFraction, Fraction>;

/// Throws ParseError carrying the byte offset of the first bad character.
Notation parse(std::string_view text);

/// A vector is evaluated; anything else must be a fraction.
Fraction parse_fraction(std::string_view text);

/// Requires vector syntax.
ContinuedFraction parse_vector(std::string_view text);

std::string serialize(const Notation& n);

}  // namespace ratknot
