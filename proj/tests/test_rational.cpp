#include <doctest.h>

#include "sr/rational.hpp"

#include <random>

using sr::BigInt;
using sr::Rational;

TEST_CASE("rational is always reduced with positive denominator") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(1, 10) * 10 == 1);
    CHECK(Rational(3, 8) + Rational(1, 4) == Rational(5, 8));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK_THROWS(Rational(1) / Rational(0));
    // Large cancellations stay exact.
    Rational big(BigInt("123456789012345678901234567890"), BigInt("987654321098765432109876543210"));
    CHECK((big * Rational(BigInt("987654321098765432109876543210"), BigInt("123456789012345678901234567890"))) == 1);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("7") == 7);
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse(" 0.25 ") == Rational(1, 4));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("ordering and conversions") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
    CHECK(Rational(12, 4).to_int() == 3);
    CHECK_THROWS_AS(Rational(1, 2).to_int(), std::range_error);
}

TEST_CASE("exact powers and roots") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(*Rational(8).exact_pow(Rational(1, 3)) == 2);
    CHECK(*Rational(4, 9).exact_pow(Rational(3, 2)) == Rational(8, 27));
    CHECK(*Rational(16).exact_pow(Rational(-1, 4)) == Rational(1, 2));
    CHECK_FALSE(Rational(2).exact_pow(Rational(1, 2)).has_value());
    CHECK_FALSE(Rational(-8).exact_pow(Rational(1, 3)).has_value());
    CHECK(*Rational(0).exact_pow(Rational(5, 2)) == 0);
}

TEST_CASE("integer roots agree with brute force") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        unsigned k = 1 + rng() % 6;
        BigInt n = BigInt(rng() % 1000000007ULL) * BigInt(rng() % 1000);
        BigInt r = sr::iroot(n, k);
        CHECK(boost::multiprecision::pow(r, k) <= n);
        CHECK(boost::multiprecision::pow(r + 1, k) > n);
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(sr::binomial(5, 2) == 10);
    CHECK(sr::binomial(30, 15) == BigInt("155117520"));
    CHECK(sr::binomial(3, 4) == 0);
}
