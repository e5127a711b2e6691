#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gb {

/// Arbitrary precision rational number, always canonical (reduced, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "3/2", "-1", "0".
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" (optional leading sign). Throws InvalidArgument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace gb
