#ifndef QCIRC_TEXT_HPP
#define QCIRC_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "qcirc/poly.hpp"

namespace qcirc {

// Textual polynomial syntax: a signed sum of terms such as
// `3/2 z1^2 z3 - z2 + 1`. A term is an optional rational coefficient followed
// by factors `zK` or `zK^E`, optionally joined by `*`. Whitespace between
// tokens is optional.

/// Throws ParseError on bad syntax and DimensionMismatch for variables
/// outside z1..zn.
Polynomial parse_polynomial(std::string_view text, std::size_t n);

/// Ascending total degree; within a degree, lexicographically descending
/// exponents (so z1 precedes z2). The zero polynomial prints as `0`.
std::string format_polynomial(const Polynomial& p);

/// One component per line; blank lines and `#` comments are skipped.
/// Throws DimensionMismatch unless exactly n components are present.
PolyMap parse_poly_map(std::string_view text, std::size_t n);
std::string format_poly_map(const PolyMap& f);

}  // namespace qcirc

#endif  // QCIRC_TEXT_HPP
