#include "doctest.h"
#include "explog/rational.hpp"
#include "explog/rng.hpp"

using namespace explog;

TEST_CASE("rationals are always canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(1, -2).denominator() == 2);  // sign lives in the numerator
    CHECK(Rational(1, -2).numerator() == -1);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK((-Rational(3, 4)).is_negative());
}

TEST_CASE("comparison is a total order consistent with cross multiplication") {
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    Lcg64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        const Rational a = rng.next_rational(100, 40);
        const Rational b = rng.next_rational(100, 40);
        const mpz_class lhs = a.numerator() * b.denominator();
        const mpz_class rhs = b.numerator() * a.denominator();
        CHECK((a < b) == (lhs < rhs));
        CHECK((a == b) == (lhs == rhs));
    }
}

TEST_CASE("integer powers") {
    CHECK(int_pow(Rational(3, 2), 2) == Rational(9, 4));
    CHECK(int_pow(Rational(2), -3) == Rational(1, 8));
    CHECK(int_pow(Rational(7, 5), 0) == Rational(1));
    CHECK(int_pow(Rational(0), 5) == Rational(0));
    CHECK_THROWS_AS(int_pow(Rational(0), -1), std::domain_error);
    // powers of coprime pairs skip the gcd but must still be canonical
    const Rational p = int_pow(Rational(10, 21), 7);
    CHECK(gcd(p.numerator(), p.denominator()) == 1);
}

TEST_CASE("string parsing accepts fractions, integers and terminating decimals") {
    CHECK(Rational::from_string("3/7") == Rational(3, 7));
    CHECK(Rational::from_string("-12") == Rational(-12));
    CHECK(Rational::from_string("1.25") == Rational(5, 4));
    CHECK(Rational::from_string("1e-6") == Rational(1, 1000000));
    CHECK(Rational::from_string("2.5e3") == Rational(2500));
    CHECK(Rational::from_string("-0.5") == Rational(-1, 2));
    CHECK(Rational::from_string("+4/6") == Rational(2, 3));
    CHECK(Rational::from_string(".5") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("--5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("1.5/2"), std::invalid_argument);
}

TEST_CASE("to_string round-trips") {
    Lcg64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Rational x = rng.next_rational(1000, 999);
        CHECK(Rational::from_string(x.to_string()) == x);
    }
    CHECK(Rational(22, 7).to_string() == "22/7");
    CHECK(Rational(-5).to_string() == "-5");
}

TEST_CASE("floor, ceil and dyadic rounding") {
    CHECK(floor(Rational(7, 2)) == 3);
    CHECK(ceil(Rational(7, 2)) == 4);
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(ceil(Rational(-7, 2)) == -3);
    CHECK(pow2(3) == Rational(8));
    CHECK(pow2(-2) == Rational(1, 4));

    CHECK(dyadic_floor(Rational(1, 3), 2) == Rational(1, 4));
    CHECK(dyadic_ceil(Rational(1, 3), 2) == Rational(1, 2));
    CHECK(dyadic_floor(Rational(-1, 3), 2) == Rational(-1, 2));
    CHECK(dyadic_ceil(Rational(-1, 3), 2) == Rational(-1, 4));

    Lcg64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Rational x = rng.next_rational(5000, 4999);
        const Rational lo = dyadic_floor(x, 20);
        const Rational hi = dyadic_ceil(x, 20);
        CHECK(lo <= x);
        CHECK(x <= hi);
        CHECK(hi - lo <= pow2(-19));
    }
}
