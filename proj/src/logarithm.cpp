#include "explog/logarithm.hpp"

namespace explog {

LnEnclosure ln_enclosure(const PosRational& a, const Precision& prec, int max_halvings) {
    const Rational& av = a.value;
    if (av == Rational(1)) return {av, Interval(Rational(0)), Rational(1), 0};

    // h = 1 gives the exact entry bracket [1 - 1/a, a - 1].
    Interval bracket(Rational(1) - av.reciprocal(), av - Rational(1));
    if (bracket.width() <= prec.eps) return {av, bracket, Rational(1), 0};

    // The two-sided gap at step h is about h * (ln a)^2, and |ln a| is
    // bounded by the entry bracket. Jumping straight to the estimated
    // final k costs one root chain instead of one per stage; every stage
    // is a valid bracket on its own, so skipping shallow ones is sound.
    const Rational slope_bound = max(bracket.lo().abs(), bracket.hi().abs());
    const Rational h_needed = prec.eps / (Rational(2) * slope_bound * slope_bound);
    int k = 1;
    if (h_needed < Rational(1, 2))
        k = static_cast<int>(frac_bits_for(h_needed));
    if (k > max_halvings) k = max_halvings;

    // One enclosure of a^h per stage serves both quotients: a^-h is its
    // exact reciprocal. The reciprocal can widen by 1/min(1, a)^2, which
    // the power budget absorbs up front.
    const Rational small = min(Rational(1), av);
    const Rational budget = prec.eps * small * small / Rational(8);
    while (true) {
        const Rational h = pow2(-k);
        const Interval power = pow_rat(a, h, Precision(budget * h));
        const Interval recip = recip_pos(power);
        const Interval qp = scale(shift(power, Rational(-1)), h.reciprocal());
        const Interval qm = scale(shift(recip, Rational(-1)), -h.reciprocal());
        const auto stage = intersect(bracket, Interval(qm.lo(), qp.hi()));
        if (!stage)
            throw std::logic_error("ln_enclosure: disjoint refinement stages");
        bracket = *stage;
        if (bracket.width() <= prec.eps) return {av, bracket, h, k};
        if (k >= max_halvings)
            throw EnclosureDiagnostic("ln_enclosure: bracket width target not reached",
                                      bracket, k);
        ++k;
    }
}

Interval ln_interval(const Interval& a, const Precision& prec) {
    if (!a.strictly_positive())
        throw std::domain_error("ln_interval: argument must be strictly positive");
    const Interval at_lo = ln_enclosure(PosRational(a.lo()), prec).bracket;
    if (a.is_point()) return at_lo;
    const Interval at_hi = ln_enclosure(PosRational(a.hi()), prec).bracket;
    return Interval(at_lo.lo(), at_hi.hi());
}

Interval log_enclosure(const Interval& base, const PosRational& x, const Precision& prec) {
    if (!base.strictly_positive())
        throw std::domain_error("log_enclosure: base must be strictly positive");
    if (base.contains(Rational(1)))
        throw std::domain_error("log_enclosure: base interval must exclude 1");
    if (base.hi() < Rational(1))
        return neg(log_enclosure(recip_pos(base), x, prec));

    const Rational& bl = base.lo();  // > 1
    const Rational& xv = x.value;
    const Rational target = max(xv, xv.reciprocal());

    // b^n >= 1 + n(b - 1): grow n until the bound certifies b^n > x and
    // b^-n < x for every b in the base interval, using only b >= bl.
    long n = 1;
    while (Rational(1) + Rational(n) * (bl - Rational(1)) <= target) {
        n *= 2;
        if (n > (1L << 40))
            throw EnclosureDiagnostic("log_enclosure: initial bracket not found",
                                      Interval(Rational(-n), Rational(n)), n);
    }
    Rational ylo(-n), yhi(n);

    long steps = 0;
    while (yhi - ylo > prec.eps) {
        const Rational ym = (ylo + yhi) / Rational(2);
        ++steps;
        Rational delta = xv * (yhi - ylo) / Rational(16);
        bool decided = false;
        for (int attempt = 0; attempt < 14; ++attempt) {
            const Interval p = pow_interval_base(base, ym, Precision(delta));
            if (p.hi() <= xv) {
                ylo = ym;
                decided = true;
                break;
            }
            if (p.lo() >= xv) {
                yhi = ym;
                decided = true;
                break;
            }
            delta = delta / Rational(16);
        }
        if (!decided)
            throw EnclosureDiagnostic(
                "log_enclosure: comparison undecidable at this precision "
                "(base interval too wide for the requested eps)",
                Interval(ylo, yhi), steps);
    }
    return Interval(ylo, yhi);
}

Verdict quotient_base_monotone(const PosRational& a, const PosRational& b,
                               const Rational& h, const Precision& prec) {
    if (a.value >= b.value)
        throw std::invalid_argument("quotient_base_monotone: requires a < b");
    const Interval qa = diff_quotient(a, h, prec).quotient;
    const Interval qb = diff_quotient(b, h, prec).quotient;
    if (qa.hi() < qb.lo()) return Verdict::verified;
    if (qa.lo() > qb.hi()) return Verdict::falsified;
    if (qa.is_point() && qb.is_point() && qa == qb) return Verdict::falsified;
    return Verdict::inconclusive;
}

Interval power_slope_bracket(const PosRational& a, const Rational& x0, unsigned k,
                             const Precision& prec) {
    const Rational h = pow2(-static_cast<long>(k));
    const Precision sub(prec.eps / Rational(8));
    const Interval value = pow_rat(a, x0, sub);
    const Interval qm = diff_quotient(a, -h, sub).quotient;
    const Interval qp = diff_quotient(a, h, sub).quotient;
    return hull(mul(value, qm), mul(value, qp));
}

}  // namespace explog
