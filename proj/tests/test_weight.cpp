#include "fuzzydom/weight.hpp"
#include "fuzzydom/random_graph.hpp"

#include <doctest.h>

using namespace fuzzydom;

TEST_CASE("parse_weight accepts short decimals exactly") {
    CHECK(parse_weight("0.15").value() == Rational(3, 20));
    CHECK(parse_weight("1").value() == 1);
    CHECK(parse_weight("0").value() == 0);
    CHECK(parse_weight(".5").value() == Rational(1, 2));
    CHECK(parse_weight("0.000001").value() == Rational(1, 1000000));
    CHECK(parse_weight("1.000000").value() == 1);
    // leading zeros are decimal, not octal
    CHECK(parse_weight("0.015").value() == Rational(3, 200));
}

TEST_CASE("parse_weight rejects bad input") {
    auto kind_of = [](const char* text) {
        try {
            parse_weight(text);
        } catch (const WeightError& e) {
            return e.kind();
        }
        FAIL("no error for " << text);
        return WeightErrorKind::Malformed;
    };
    CHECK(kind_of("0.1234567") == WeightErrorKind::OverPrecision);
    CHECK(kind_of("1.5") == WeightErrorKind::OutOfRange);
    CHECK(kind_of("2") == WeightErrorKind::OutOfRange);
    CHECK(kind_of("3/2") == WeightErrorKind::OutOfRange);
    CHECK(kind_of("") == WeightErrorKind::Malformed);
    CHECK(kind_of("abc") == WeightErrorKind::Malformed);
    CHECK(kind_of("-0.1") == WeightErrorKind::Malformed);
    CHECK(kind_of("0.") == WeightErrorKind::Malformed);
    CHECK(kind_of("0.1.2") == WeightErrorKind::Malformed);
    CHECK(kind_of("1e-3") == WeightErrorKind::Malformed);
    CHECK(kind_of("1/0") == WeightErrorKind::Malformed);
}

TEST_CASE("fractions cover values without a short decimal") {
    CHECK(parse_weight("1/3").value() == Rational(1, 3));
    CHECK(parse_weight("2/6").to_string() == "1/3");
    CHECK(Weight::from_rational(Rational(1, 256)).to_string() == "1/256");
    CHECK(Weight::from_rational(Rational(1, 64)).to_string() == "0.015625");
}

TEST_CASE("serialization is minimal") {
    CHECK(parse_weight("0.50").to_string() == "0.5");
    CHECK(parse_weight("1.0").to_string() == "1");
    CHECK(parse_weight("0").to_string() == "0");
    CHECK(parse_weight("0.000001").to_string() == "0.000001");
    CHECK(format_rational(Rational(7, 5)) == "1.4");
    CHECK(format_rational(Rational(-3, 20)) == "-0.15");
    CHECK(format_rational(Rational(2, 3)) == "2/3");
}

TEST_CASE("property: parse_weight(to_string(w)) == w") {
    SeededRng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const auto den = rng.below(1000) + 1;
        const auto num = rng.below(den + 1);
        Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
        r.canonicalize();
        const Weight w = Weight::from_rational(r);
        CHECK(parse_weight(w.to_string()) == w);
    }
}

TEST_CASE("weights compare and take minima exactly") {
    const Weight a = parse_weight("0.2");
    const Weight b = parse_weight("1/5");
    CHECK(a == b);
    CHECK(parse_weight("0.15") < a);
    CHECK(min(parse_weight("0.3"), a) == a);
    CHECK(Weight::from_rational(Rational(1, 5)) == a);
    CHECK_THROWS_AS(Weight::from_rational(Rational(-1, 10)), WeightError);
}
