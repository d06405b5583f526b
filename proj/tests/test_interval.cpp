#include "doctest.h"
#include "explog/interval.hpp"
#include "explog/rng.hpp"
#include "oracles.hpp"

using namespace explog;
using explog::testing::rat;

namespace {

Interval random_interval(Lcg64& rng, long span) {
    const Rational a = rng.next_rational(span, 50);
    const Rational b = rng.next_rational(span, 50);
    return hull(Interval(a), Interval(b));
}

// A point inside [lo, hi] at fraction j/k of the width.
Rational point_inside(const Interval& i, long j, long k) {
    return i.lo() + i.width() * Rational(j) / Rational(k);
}

}  // namespace

TEST_CASE("interval construction and accessors") {
    const Interval i(Rational(1), Rational(3));
    CHECK(i.width() == Rational(2));
    CHECK(i.midpoint() == Rational(2));
    CHECK(i.contains(Rational(2)));
    CHECK(!i.contains(Rational(4)));
    CHECK(Interval(Rational(5)).is_point());
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("basic operations") {
    CHECK(add(Interval(rat("1"), rat("2")), Interval(rat("3"), rat("4"))) ==
          Interval(rat("4"), rat("6")));
    CHECK(neg(Interval(rat("1"), rat("2"))) == Interval(rat("-2"), rat("-1")));
    CHECK(mul_pos(Interval(rat("2"), rat("4")), Interval(rat("3"), rat("5"))) ==
          Interval(rat("6"), rat("20")));
    CHECK(recip_pos(Interval(rat("2"), rat("4"))) == Interval(rat("1/4"), rat("1/2")));
    CHECK_THROWS_AS(mul_pos(Interval(rat("0"), rat("1")), Interval(rat("1"), rat("2"))),
                    std::domain_error);
    CHECK_THROWS_AS(recip_pos(Interval(rat("-1"), rat("1"))), std::domain_error);
    CHECK_THROWS_AS(recip_pos(Interval(rat("0"), rat("1"))), std::domain_error);
}

TEST_CASE("intersection returns the common subinterval or an explicit empty marker") {
    const auto common = intersect(Interval(rat("1"), rat("3")), Interval(rat("2"), rat("5")));
    REQUIRE(common);
    CHECK(*common == Interval(rat("2"), rat("3")));
    CHECK(!intersect(Interval(rat("1"), rat("2")), Interval(rat("3"), rat("4"))));
    const auto touching = intersect(Interval(rat("1"), rat("2")), Interval(rat("2"), rat("4")));
    REQUIRE(touching);
    CHECK(touching->is_point());
}

TEST_CASE("hull, scale, shift, general mul") {
    CHECK(hull(Interval(rat("1"), rat("2")), Interval(rat("4"), rat("5"))) ==
          Interval(rat("1"), rat("5")));
    CHECK(scale(Interval(rat("1"), rat("2")), rat("-3")) == Interval(rat("-6"), rat("-3")));
    CHECK(shift(Interval(rat("1"), rat("2")), rat("10")) == Interval(rat("11"), rat("12")));
    CHECK(mul(Interval(rat("-2"), rat("3")), Interval(rat("-1"), rat("4"))) ==
          Interval(rat("-8"), rat("12")));
}

TEST_CASE("outward dyadic rounding preserves containment") {
    CHECK(outward_dyadic(Interval(rat("1/3"), rat("2/3")), 4) ==
          Interval(rat("5/16"), rat("11/16")));
    Lcg64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const Interval i = random_interval(rng, 1000);
        const Interval o = outward_dyadic(i, 24);
        CHECK(o.contains(i));
        CHECK(o.width() <= i.width() + pow2(-23));
    }
}

TEST_CASE("operation results enclose the exact pointwise results") {
    Lcg64 rng(99);
    for (int t = 0; t < 1000; ++t) {
        const Interval a = random_interval(rng, 200);
        const Interval b = random_interval(rng, 200);
        const Rational pa = point_inside(a, rng.next_int(0, 8), 8);
        const Rational pb = point_inside(b, rng.next_int(0, 8), 8);
        CHECK(add(a, b).contains(pa + pb));
        CHECK(neg(a).contains(-pa));
        CHECK(sub(a, b).contains(pa - pb));
        CHECK(mul(a, b).contains(pa * pb));
        if (a.strictly_positive() && b.strictly_positive())
            CHECK(mul_pos(a, b).contains(pa * pb));
        if (a.strictly_positive())
            CHECK(recip_pos(a).contains(pa.reciprocal()));
    }
}

TEST_CASE("outward decimal rendering") {
    CHECK(to_decimal(Interval(rat("1/3")), 4) ==
          std::pair<std::string, std::string>("0.3333", "0.3334"));
    CHECK(to_decimal(Interval(rat("0")), 4) ==
          std::pair<std::string, std::string>("0.0000", "0.0000"));
    CHECK(to_decimal(Interval(rat("2/3")), 2) ==
          std::pair<std::string, std::string>("0.66", "0.67"));
    CHECK(to_decimal(Interval(rat("-1/3")), 2) ==
          std::pair<std::string, std::string>("-0.34", "-0.33"));
    CHECK(decimal_floor(rat("5"), 0) == "5");
    CHECK(decimal_ceil(rat("-13/10"), 1) == "-1.3");
}

TEST_CASE("decimal pair parses back to an enclosing pair") {
    Lcg64 rng(13);
    for (int t = 0; t < 200; ++t) {
        const Interval i = random_interval(rng, 5000);
        const auto [lo_text, hi_text] = to_decimal(i, 6);
        CHECK(Rational::from_string(lo_text) <= i.lo());
        CHECK(Rational::from_string(hi_text) >= i.hi());
    }
}
