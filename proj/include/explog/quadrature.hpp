#pragma once

#include "explog/powers.hpp"

namespace explog {

/// Exact lower and upper Riemann sums of the integral of 1/t over [1, x]
/// on a uniform partition, for x > 1. The integrand is decreasing, so
/// right endpoints give the lower sum and left endpoints the upper, and
/// the gap obeys the closed form
///   upper_sum - lower_sum = (x - 1)(1 - 1/x) / subintervals
/// exactly.
struct RiemannEnclosure {
    Rational x;
    unsigned long subintervals;
    Rational lower_sum;
    Rational upper_sum;
};

RiemannEnclosure riemann_sums(const PosRational& x, unsigned long subintervals);

/// Enclosure of the integral of 1/t over [1, x] — an independent route to
/// ln x that never touches the secant-slope construction. The subinterval
/// count comes straight from the exact gap formula; large x is reduced
/// first through ln x = ln(x / 2^k) + k ln 2, and x < 1 by orientation.
Interval ln_integral(const PosRational& x, const Precision& prec);

}  // namespace explog
