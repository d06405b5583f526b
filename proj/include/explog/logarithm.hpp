#pragma once

#include "explog/diagnostics.hpp"
#include "explog/inequalities.hpp"

namespace explog {

/// Guaranteed enclosure of ln a built from the two-sided secant slopes of
/// a^x at 0: the slope at step -h is a lower bound and the slope at +h an
/// upper bound, and the pair closes in as h is halved.
struct LnEnclosure {
    Rational a;
    Interval bracket;
    Rational h_final;  // last step size used (2^-halvings)
    int halvings;
};

/// Halves h = 2^-k until the bracket width is <= prec.eps. Dyadic steps
/// keep every power a chain of square roots, the cheapest case. The cap
/// converts a (theoretically impossible) non-convergence into an
/// EnclosureDiagnostic carrying the best bracket.
LnEnclosure ln_enclosure(const PosRational& a, const Precision& prec,
                         int max_halvings = 64);

/// ln over a strictly positive interval argument: the hull of the endpoint
/// enclosures, valid because ln is increasing.
Interval ln_interval(const Interval& a, const Precision& prec);

/// Enclosure [y_lo, y_hi] of log_base(x), y_hi - y_lo <= prec.eps, by
/// bisection on the exponent: y_lo is certified by base^{y_lo} <= x for
/// every point of the base interval, and y_hi symmetrically. The initial
/// exponent bracket comes from the Bernoulli bound b^n >= 1 + n(b-1).
/// The base interval must exclude 1 (std::domain_error otherwise); an
/// undecidable comparison after capped refinement — possible when the base
/// interval is too wide for the requested eps — raises EnclosureDiagnostic.
Interval log_enclosure(const Interval& base, const PosRational& x, const Precision& prec);

/// Checks that (a^h - 1)/h is strictly increasing in the base: verified
/// when the a-quotient separates strictly below the b-quotient, falsified
/// on the reverse strict order (a defect). Requires 0 < a < b.
Verdict quotient_base_monotone(const PosRational& a, const PosRational& b,
                               const Rational& h, const Precision& prec);

/// Two-sided secant bracket for the slope of a^x at x0 with step h = 2^-k:
/// the hull of a^{x0} * (a^{±h} - 1)/(±h), which contains (ln a) * a^{x0}
/// and tightens as k grows.
Interval power_slope_bracket(const PosRational& a, const Rational& x0, unsigned k,
                             const Precision& prec);

}  // namespace explog
