#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace contractkit {

/// Exact rational scalar. GMP keeps numerator/denominator canonical
/// (positive denominator, gcd 1) after every arithmetic operation.
using Rational = mpq_class;

/// Parses "3", "-1/2", "0.8", "1.25e-2" into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace contractkit
