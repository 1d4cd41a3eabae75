#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace latkern {

// Ground field: exact rationals backed by GMP.
using Rational = mpq_class;

/// Parses "a" or "a/b" (decimal integers, optional sign). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical decimal rendering: "a" when integral, "a/b" otherwise.
std::string to_string(const Rational& q);

}  // namespace latkern
