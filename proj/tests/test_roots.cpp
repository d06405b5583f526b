#include "doctest.h"
#include "explog/rng.hpp"
#include "explog/roots.hpp"
#include "oracles.hpp"

using namespace explog;
using explog::testing::oracle_root;
using explog::testing::rat;
using explog::testing::within;

TEST_CASE("square root of 2 against the bisection oracle") {
    const Precision eps(rat("1e-3"));
    const Interval r = nth_root(Rational(2), 2, eps);
    CHECK(within(r, "1.414", "1.415"));
    CHECK(r.width() <= eps.eps);
    // independent oracle agrees
    const Interval o = oracle_root(Rational(2), 2, rat("1e-9"));
    CHECK(intersect(r, o));
}

TEST_CASE("roots of one and first roots are exact") {
    for (unsigned long n : {1ul, 2ul, 5ul, 64ul, 1ul << 20}) {
        CHECK(nth_root(Rational(1), n, Precision(rat("1e-8"))) == Interval(Rational(1)));
    }
    CHECK(nth_root(Rational(22, 7), 1, Precision(rat("1e-8"))) == Interval(Rational(22, 7)));
    CHECK(nth_root(Rational(0), 3, Precision(rat("1e-8"))) == Interval(Rational(0)));
}

TEST_CASE("perfect powers collapse to exact points") {
    const Precision eps(rat("1e-6"));
    CHECK(nth_root(Rational(9, 4), 2, eps) == Interval(Rational(3, 2)));
    CHECK(nth_root(Rational(27, 8), 3, eps) == Interval(Rational(3, 2)));
    CHECK(nth_root(Rational(4, 9), 2, eps) == Interval(Rational(2, 3)));
    CHECK(nth_root(int_pow(Rational(7, 5), 12), 12, eps) == Interval(Rational(7, 5)));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(nth_root(Rational(-1), 2, Precision(rat("1e-3"))), std::domain_error);
    CHECK_THROWS_AS(nth_root(Rational(2), 0, Precision(rat("1e-3"))), std::invalid_argument);
}

TEST_CASE("roots below one") {
    const Interval r = nth_root(Rational(1, 2), 2, Precision(rat("1e-4")));
    CHECK(within(r, "0.7070", "0.7072"));
    const Interval c = nth_root(Rational(1, 10), 3, Precision(rat("1e-4")));
    CHECK(within(c, "0.4641", "0.4643"));  // cbrt(0.1) = 0.46415888...
}

TEST_CASE("containment and width for random inputs") {
    Lcg64 rng(31);
    for (int t = 0; t < 150; ++t) {
        const Rational x(rng.next_int(0, 500), rng.next_int(1, 60));
        const auto n = static_cast<unsigned long>(rng.next_int(1, 9));
        const Rational eps = pow2(-rng.next_int(4, 40));
        const Interval r = nth_root(x, n, Precision(eps));
        CHECK(r.width() <= eps);
        CHECK(r.lo() >= Rational(0));
        CHECK(int_pow(r.lo(), static_cast<long>(n)) <= x);
        CHECK(int_pow(r.hi(), static_cast<long>(n)) >= x);
    }
}

TEST_CASE("dyadic root degrees stay exact on the contract") {
    // degree 2^16 exercises the square-root chain
    const Rational eps = rat("1e-9");
    const Interval r = nth_root(Rational(2), 1ul << 16, Precision(eps));
    CHECK(r.width() <= eps);
    CHECK(int_pow(r.lo(), 4) <= nth_root(Rational(2), 1ul << 14, Precision(eps)).hi());
}

TEST_CASE("halving eps at most adds a bounded number of bisection steps") {
    Lcg64 rng(77);
    for (int t = 0; t < 25; ++t) {
        const Rational x(rng.next_int(2, 300), rng.next_int(1, 20));
        const auto n = static_cast<unsigned long>(rng.next_int(2, 8));
        const Rational eps = pow2(-rng.next_int(6, 24));
        long coarse = 0, fine = 0;
        nth_root_counted(x, n, Precision(eps), &coarse);
        nth_root_counted(x, n, Precision(eps / Rational(2)), &fine);
        CHECK(fine <= 2 * coarse + 64);
    }
}

TEST_CASE("enclosures at eps/2 nest inside enclosures at eps for prime degrees") {
    Lcg64 rng(101);
    for (int t = 0; t < 60; ++t) {
        const Rational x(rng.next_int(2, 400), rng.next_int(1, 30));
        const unsigned long primes[] = {2, 3, 5, 7, 11, 13};
        const unsigned long n = primes[rng.next_below(6)];
        const Rational eps = pow2(-rng.next_int(4, 30));
        const Interval coarse = nth_root(x, n, Precision(eps));
        const Interval fine = nth_root(x, n, Precision(eps / Rational(2)));
        CHECK(coarse.contains(fine));
    }
}

TEST_CASE("interval powers with directed rounding stay sound") {
    CHECK(int_pow_interval(Interval(Rational(2)), 10, 32) == Interval(Rational(1024)));
    const Interval base(rat("2"), rat("3"));
    const Interval p = int_pow_interval(base, 4, 48);
    CHECK(p.contains(Interval(rat("16"), rat("81"))));
    CHECK(p.width() <= rat("65") + rat("1/1000"));
    const Interval q = int_pow_interval(base, -2, 48);
    CHECK(q.contains(Interval(rat("1/9"), rat("1/4"))));
    CHECK_THROWS_AS(int_pow_interval(Interval(rat("0"), rat("1")), 2, 32), std::domain_error);
}
