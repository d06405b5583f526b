#pragma once

#include "explog/interval.hpp"

namespace explog {

/// Enclosure of the n-th root of x >= 0 with width <= prec.eps.
///
/// The returned interval [lo, hi] satisfies lo >= 0 and lo^n <= x <= hi^n.
/// When x is a perfect n-th power of a rational the result collapses to an
/// exact point. Negative x throws std::domain_error, n = 0 throws
/// std::invalid_argument.
///
/// Method: pure bisection on the exact rational predicate mid^n <= x,
/// applied stage by stage over the prime factorization of n so that large
/// dyadic root degrees cost a chain of square-root bisections instead of a
/// single bisection with an infeasible exact power.
Interval nth_root(const Rational& x, unsigned long n, const Precision& prec);

/// Same, accumulating the number of bisection iterations into *steps.
Interval nth_root_counted(const Rational& x, unsigned long n, const Precision& prec,
                          long* steps);

/// Enclosure of base^p for a strictly positive interval base and integer p,
/// by binary exponentiation with outward dyadic rounding (denominator
/// <= 2^round_bits) after every multiplication. Point bases yield exact
/// point results.
Interval int_pow_interval(const Interval& base, long p, unsigned long round_bits);

/// Smallest b such that 2^-b <= delta (possibly over-approximated by one).
unsigned long frac_bits_for(const Rational& delta);

}  // namespace explog
