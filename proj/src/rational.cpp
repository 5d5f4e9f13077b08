#include "fuzzydom/rational.hpp"
#include "fuzzydom/weight.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace fuzzydom {

namespace {

bool all_digits(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class pow10(std::size_t exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

// Number of fractional digits needed to print value exactly, or -1 if infinite.
long decimal_digits(const Rational& value) {
    mpz_class den = value.get_den();
    long twos = 0;
    long fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return -1;
    return std::max(twos, fives);
}

std::string format_decimal(const Rational& value, long digits) {
    const bool negative = sgn(value) < 0;
    const Rational magnitude = negative ? Rational(-value) : value;
    const mpz_class scaled = magnitude.get_num() * pow10(static_cast<std::size_t>(digits)) /
                             magnitude.get_den();
    std::string text = scaled.get_str();
    if (digits > 0) {
        if (text.size() <= static_cast<std::size_t>(digits))
            text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
        text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + text : text;
}

struct DecimalParts {
    bool negative = false;
    std::string_view integer;
    std::string_view fraction;
};

bool split_decimal(std::string_view text, DecimalParts& parts) {
    if (!text.empty() && text.front() == '-') {
        parts.negative = true;
        text.remove_prefix(1);
    }
    const auto dot = text.find('.');
    parts.integer = text.substr(0, dot);
    parts.fraction = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!all_digits(parts.integer) || !all_digits(parts.fraction)) return false;
    if (parts.integer.empty() && parts.fraction.empty()) return false;
    // "1." is not accepted
    if (dot != std::string_view::npos && parts.fraction.empty()) return false;
    return true;
}

Rational from_parts(const DecimalParts& parts) {
    const std::string digits = std::string(parts.integer) + std::string(parts.fraction);
    Rational r(mpz_class(digits.empty() ? std::string("0") : digits, 10), pow10(parts.fraction.size()));
    r.canonicalize();
    return parts.negative ? Rational(-r) : r;
}

std::optional<Rational> parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return std::nullopt;
    std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    const mpz_class d(std::string{den}, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(mpz_class(std::string{num}, 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

bool is_finite_decimal(const Rational& value) { return decimal_digits(value) >= 0; }

std::string format_rational(const Rational& value) {
    const long digits = decimal_digits(value);
    if (digits < 0) return value.get_str();
    return format_decimal(value, digits);
}

Rational parse_rational(std::string_view text) {
    if (auto fraction = parse_fraction(text)) return *fraction;
    DecimalParts parts;
    if (!split_decimal(text, parts))
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    return from_parts(parts);
}

Weight Weight::from_rational(const Rational& value) {
    Rational canonical = value;
    canonical.canonicalize();
    if (sgn(canonical) < 0 || canonical > 1)
        throw WeightError(WeightErrorKind::OutOfRange,
                          "weight " + format_rational(canonical) + " outside [0,1]");
    return Weight(std::move(canonical));
}

std::string Weight::to_string() const {
    const long digits = decimal_digits(value_);
    if (digits < 0 || digits > max_fraction_digits) return value_.get_str();
    return format_decimal(value_, digits);
}

Weight parse_weight(std::string_view text) {
    const std::string shown(text);
    if (text.find('/') != std::string_view::npos) {
        std::optional<Rational> r;
        try {
            r = parse_fraction(text);
        } catch (const std::invalid_argument& e) {
            throw WeightError(WeightErrorKind::Malformed, e.what());
        }
        return Weight::from_rational(*r);
    }
    DecimalParts parts;
    if (!split_decimal(text, parts) || parts.negative)
        throw WeightError(WeightErrorKind::Malformed, "malformed weight '" + shown + "'");
    if (parts.fraction.size() > static_cast<std::size_t>(Weight::max_fraction_digits))
        throw WeightError(WeightErrorKind::OverPrecision,
                          "weight '" + shown + "' has more than 6 fractional digits");
    return Weight::from_rational(from_parts(parts));
}

}  // namespace fuzzydom
