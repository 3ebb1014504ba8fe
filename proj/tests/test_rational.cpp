#include <doctest.h>

#include <random>
#include <stdexcept>

#include "thetadiv/rational.hpp"

using thetadiv::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    const Rational r(6, -8);
    CHECK(r.str() == "-3/4");
    CHECK(r.denominator() == 4);
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, -5).str() == "0");
}

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("-1") == Rational(-1));
    CHECK(Rational::parse("1/8") == Rational(1, 8));
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(Rational(1, 24) < Rational(1, 12));
}

TEST_CASE("integer powers") {
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("string form round-trips for random fractions") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const auto den = static_cast<std::int64_t>(rng() % 999) + 1;
        const Rational r(num, den);
        CHECK(Rational::parse(r.str()) == r);
        CHECK((r + (-r)).is_zero());
    }
}
