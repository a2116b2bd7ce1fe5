#ifndef QCIRC_NUMERIC_HPP
#define QCIRC_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcirc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `p` or `p/q` (optional leading sign) into a canonical rational.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical `p/q` text; integers are written without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace qcirc

#endif  // QCIRC_NUMERIC_HPP
