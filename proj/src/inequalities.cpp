#include "explog/inequalities.hpp"

namespace explog {

MeanPair amgm(const std::vector<Rational>& values, const Precision& prec) {
    if (values.empty()) throw std::invalid_argument("amgm: empty input");
    Rational product(1);
    Rational sum(0);
    for (const auto& v : values) {
        if (v.is_negative()) throw std::domain_error("amgm: negative input");
        product *= v;
        sum += v;
    }
    const auto n = static_cast<long>(values.size());
    // One root extraction of the exact product, not n incremental ones.
    MeanPair out{nth_root(product, static_cast<unsigned long>(n), prec),
                 sum / Rational(n), values};
    return out;
}

QuotientBracket diff_quotient(const PosRational& a, const Rational& h,
                              const Precision& prec) {
    if (h.is_zero()) throw std::domain_error("diff_quotient: h must be nonzero");
    // Power enclosure at eps*|h| so the division by h lands at width <= eps.
    const Interval p = pow_rat(a, h, Precision(prec.eps * h.abs()));
    return QuotientBracket{a.value, h, scale(shift(p, Rational(-1)), h.reciprocal())};
}

Verdict check_quotient_monotone(const PosRational& a, const Rational& h,
                                const Rational& k, const Precision& prec) {
    if (h.is_zero() || k.is_zero())
        throw std::invalid_argument("check_quotient_monotone: zero step");
    if (h >= k) throw std::invalid_argument("check_quotient_monotone: requires h < k");
    const Interval qh = diff_quotient(a, h, prec).quotient;
    const Interval qk = diff_quotient(a, k, prec).quotient;
    if (qh.hi() <= qk.lo()) return Verdict::verified;
    if (qh.lo() > qk.hi()) return Verdict::falsified;
    return Verdict::inconclusive;
}

}  // namespace explog
