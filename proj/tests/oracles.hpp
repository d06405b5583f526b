#pragma once

// Test-side oracles, deliberately naive and independent of the library's
// computation paths: a plain bisection with no perfect-power shortcut or
// stage chaining, a direct exact Riemann sum, and raw series partial sums.
// Frozen decimal constants in the test files were produced ahead of time by
// tests/oracle/derive_expected.py (exact Fraction arithmetic).

#include "explog/interval.hpp"

namespace explog::testing {

// Bisection on mid^n <= x over [min(1,x), max(1,x)]. Affordable for small n.
inline Interval oracle_root(const Rational& x, unsigned long n, const Rational& eps) {
    if (x.is_zero()) return Interval(Rational(0));
    Rational lo = min(Rational(1), x);
    Rational hi = max(Rational(1), x);
    while (hi - lo > eps) {
        const Rational mid = (lo + hi) / Rational(2);
        if (int_pow(mid, static_cast<long>(n)) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

// Exact lower/upper Riemann sums of 1/t over [1, x], x > 1, small counts.
inline Interval oracle_ln(const Rational& x, unsigned long subintervals) {
    const Rational dt = (x - Rational(1)) / Rational(static_cast<long>(subintervals));
    Rational lower(0), upper(0);
    for (unsigned long i = 0; i < subintervals; ++i) {
        const Rational left = Rational(1) + Rational(static_cast<long>(i)) * dt;
        upper += dt / left;
        lower += dt / (left + dt);
    }
    return Interval(lower, upper);
}

// e from partial sums with the remainder after n terms bounded by 3/(n+1)!.
inline Interval oracle_e(const Rational& eps) {
    Rational sum(0), term(1);
    for (long k = 0;; ++k) {
        sum += term;
        const Rational remainder = Rational(3) * term / Rational(k + 1);
        if (remainder <= eps) return Interval(sum, sum + remainder);
        term = term / Rational(k + 1);
    }
}

inline Rational rat(const char* text) { return Rational::from_string(text); }

// Assertion helper: enclosure lies inside the closed band [lo, hi].
inline bool within(const Interval& value, const char* lo, const char* hi) {
    return rat(lo) <= value.lo() && value.hi() <= rat(hi);
}

}  // namespace explog::testing
