#pragma once

#include "fuzzydom/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzydom {

enum class WeightErrorKind { Malformed, OverPrecision, OutOfRange };

class WeightError : public std::invalid_argument {
public:
    WeightError(WeightErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    WeightErrorKind kind() const noexcept { return kind_; }

private:
    WeightErrorKind kind_;
};

/// Membership degree in [0,1], held exactly.
class Weight {
public:
    static constexpr int max_fraction_digits = 6;

    Weight() = default;

    /// Throws WeightError(OutOfRange) unless 0 <= value <= 1.
    static Weight from_rational(const Rational& value);

    const Rational& value() const noexcept { return value_; }

    /// Canonical text: minimal-digit decimal, or "num/den" when no finite
    /// decimal with at most six fractional digits exists.
    std::string to_string() const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Weight(Rational value) : value_(std::move(value)) {}

    Rational value_{0};
};

inline const Weight& min(const Weight& a, const Weight& b) { return b < a ? b : a; }

/// Parses a membership degree. Accepts a decimal literal with an optional
/// integer part and at most six fractional digits ("0.15", "1", ".5"), or an
/// exact fraction "num/den" (the form used when a value has no short decimal).
Weight parse_weight(std::string_view text);

}  // namespace fuzzydom
