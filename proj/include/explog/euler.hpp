#pragma once

#include "explog/logarithm.hpp"

namespace explog {

/// Enclosure of the base whose logarithm is exactly 1, located by bisection
/// inside [2, 3]. Both entry bounds are certified before bisecting: the
/// secant slope of 2^x at h = 1/2 shows ln 2 < 1, and the slope of 3^x at
/// h = -1/8 shows ln 3 > 1.
struct EulerEnclosure {
    Interval bracket;
    long iterations;
};

/// Bracket width <= prec.eps, with the left endpoint certified below e and
/// the right endpoint above. Results are memoized per precision level; any
/// cached bracket at least as tight as requested is reused.
EulerEnclosure compute_e(const Precision& prec);

/// Exact Taylor partial sum of e^x with its Lagrange remainder bound.
/// partial_sum = sum_{k=0}^{terms_used} x^k / k!, and
/// remainder_bound = M * |x|^{terms_used+1} / (terms_used+1)! where M = 1
/// for x <= 0 and M = 3^ceil(x) for x > 0 (valid since e < 3).
struct SeriesState {
    Rational x;
    Rational partial_sum;
    long terms_used;
    Rational remainder_bound;
};

SeriesState exp_series_state(const Rational& x, long terms);

/// Enclosure [partial_sum - R, partial_sum + R] of e^x with the term count
/// grown until R <= prec.eps / 2.
Interval exp_series(const Rational& x, const Precision& prec);

/// Enclosure of e^x as a rational power of the e bracket itself; the
/// independent route against exp_series.
Interval exp_pow(const Rational& x, const Precision& prec);

/// Exact (1 + x/n)^n. Throws std::domain_error when 1 + x/n <= 0 and
/// std::invalid_argument when n = 0.
Rational compound_value(const Rational& x, unsigned long n);

/// Secant bracket for the slope of e^x at x0 with step h = 2^-k:
/// lower = E * (e^-h - 1)/(-h), upper = E * (e^h - 1)/h, where E is the
/// returned enclosure of e^{x0}. The slope of e^x equals the function
/// value, so the bracket straddles E and tightens as k grows.
struct DerivativeBracket {
    Interval lower;
    Interval value;
    Interval upper;
};

DerivativeBracket exp_derivative_bracket(const Rational& x0, unsigned k,
                                         const Precision& prec);

}  // namespace explog
