#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fuzzydom {

/// Exact rational scalar used for every membership value, cardinality and LP quantity.
using Rational = mpq_class;

/// True when the reduced denominator has no prime factors other than 2 and 5.
bool is_finite_decimal(const Rational& value);

/// Renders `value` as a minimal-digit decimal when it has a finite expansion,
/// otherwise as "num/den".
std::string format_rational(const Rational& value);

/// Parses either a decimal literal ("0.15", "1", ".5", "-2.25") or a fraction
/// ("3/7"). No precision cap; throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

}  // namespace fuzzydom
