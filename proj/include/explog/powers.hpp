#pragma once

#include <vector>

#include "explog/interval.hpp"
#include "explog/roots.hpp"

namespace explog {

/// Strictly positive rational; the precondition is part of the type.
struct PosRational {
    explicit PosRational(Rational v) : value(std::move(v)) {
        if (!value.is_positive())
            throw std::domain_error("PosRational: value must be > 0");
    }
    PosRational(long n) : PosRational(Rational(n)) {}  // NOLINT: implicit for literals

    Rational value;
};

/// Enclosure of a^q with width <= prec.eps for a > 0 and rational q.
///
/// q is reduced to lowest terms p/n (n > 0), the n-th root is extracted
/// first (keeping magnitudes near 1), and the integer power p is applied by
/// interval binary exponentiation with outward dyadic rounding. Whenever
/// a^q is itself rational the result is the exact point interval.
Interval pow_rat(const PosRational& a, const Rational& q, const Precision& prec);

/// Enclosure of x^q over every x in a strictly positive interval base:
/// monotone in the base (increasing for q > 0, decreasing for q < 0), so
/// the endpoint enclosures bracket the image.
Interval pow_interval_base(const Interval& base, const Rational& q, const Precision& prec);

/// Nondecreasing lower bounds of a^x sampled along the rational exponents
/// q_i = x - 2^-i, i = 1..count, for a > 1. Every entry is a certified
/// lower bound of a^{q_i} (hence of a^x), and the sequence climbs toward
/// a^x as the exponents do.
std::vector<Rational> power_lower_samples(const PosRational& a, const Rational& x,
                                          int count);

}  // namespace explog
