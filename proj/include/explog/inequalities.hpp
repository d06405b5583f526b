#pragma once

#include <vector>

#include "explog/powers.hpp"
#include "explog/verdict.hpp"

namespace explog {

/// Geometric and arithmetic means of a list of nonnegative rationals.
/// The arithmetic mean is exact; the geometric mean is an enclosure of the
/// n-th root of the exact product. Soundness contract: geometric.lo() never
/// exceeds the arithmetic mean.
struct MeanPair {
    Interval geometric;
    Rational arithmetic;
    std::vector<Rational> inputs;
};

/// Throws std::invalid_argument on an empty list and std::domain_error on
/// any negative entry.
MeanPair amgm(const std::vector<Rational>& values, const Precision& prec);

/// Enclosure of the secant slope (a^h - 1)/h of x -> a^x through x = 0.
/// These quotients are nondecreasing in h (convexity), which is what every
/// logarithm bound downstream leans on.
struct QuotientBracket {
    Rational base;
    Rational h;
    Interval quotient;
};

/// Width <= prec.eps; exact when a^h is rational. h = 0 throws
/// std::domain_error.
QuotientBracket diff_quotient(const PosRational& a, const Rational& h,
                              const Precision& prec);

/// Checks (a^h - 1)/h <= (a^k - 1)/k for h < k at enclosure level.
/// `verified` when the enclosures separate in the right order at this
/// precision, `inconclusive` when they overlap, `falsified` when they
/// separate the wrong way — which would mean a defect, since the
/// underlying inequality is a theorem. Throws std::invalid_argument unless
/// h < k and both are nonzero.
Verdict check_quotient_monotone(const PosRational& a, const Rational& h,
                                const Rational& k, const Precision& prec);

}  // namespace explog
