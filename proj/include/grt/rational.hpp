#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grt {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with an optional leading sign; q must be positive.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace grt
