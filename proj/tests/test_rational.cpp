#include "gpss/rational.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using gpss::BigInt;
using gpss::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
    const Rational r(BigInt(4), BigInt(6));
    CHECK(r.num() == 2);
    CHECK(r.den() == 3);

    const Rational neg(BigInt(3), BigInt(-6));
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 2);

    const Rational zero(BigInt(0), BigInt(-7));
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);

    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("equality is structural after reduction") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-2), BigInt(4)) == Rational(BigInt(1), BigInt(-2)));
    CHECK(Rational(BigInt(1), BigInt(3)) != Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("ordering by cross multiplication") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(BigInt(1), BigInt(3)));
    CHECK(Rational(7) >= Rational(7));
}

TEST_CASE("arithmetic is exact: (a + b) - b == a on random rationals") {
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 500; ++i) {
        const Rational a = oracle::random_rational(rng);
        const Rational b = oracle::random_rational(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("string rendering uses num/den only for non-integers") {
    CHECK(Rational(BigInt(4), BigInt(2)).str() == "2");
    CHECK(Rational(BigInt(-4), BigInt(6)).str() == "-2/3");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("parsing accepts integers and fractions, rejects junk") {
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("4/6") == Rational(BigInt(2), BigInt(3)));
    CHECK(Rational::parse("-3/9") == Rational(BigInt(-1), BigInt(3)));

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
}

TEST_CASE("parse/str round trip is the identity on random rationals") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const Rational r = oracle::random_rational(rng);
        CHECK(Rational::parse(r.str()) == r);
    }
}
