#include "explog/euler.hpp"

#include <limits>
#include <map>
#include <mutex>

namespace explog {

namespace {

long ceil_as_long(const Rational& x) {
    const mpz_class c = ceil(x);
    if (!c.fits_slong_p()) throw std::overflow_error("exponent out of range");
    return c.get_si();
}

std::mutex e_memo_mutex;
std::map<Rational, EulerEnclosure>& e_memo() {
    static std::map<Rational, EulerEnclosure> memo;
    return memo;
}

// Decides ln(v) < 1 or ln(v) > 1 for rational v by refining the ln
// enclosure until it no longer straddles 1. Terminates because ln of a
// rational other than e itself is never exactly 1.
bool ln_below_one(const Rational& v, Rational delta) {
    const PosRational base{v};
    for (int attempt = 0; attempt < 24; ++attempt) {
        const Interval l = ln_enclosure(base, Precision(delta)).bracket;
        if (l.hi() < Rational(1)) return true;
        if (l.lo() > Rational(1)) return false;
        delta = delta / Rational(16);
    }
    throw EnclosureDiagnostic("compute_e: ln comparison undecidable at midpoint " +
                                  v.to_string(),
                              Interval(v), 0);
}

EulerEnclosure compute_e_uncached(const Precision& prec) {
    const Rational one(1);
    const Rational delta0 = min(prec.eps / Rational(8), Rational(1, 32));

    // Entry certificates for the [2, 3] bracket.
    if (!(ln_enclosure(PosRational(Rational(2)), Precision(delta0)).bracket.hi() < one))
        throw std::logic_error("compute_e: entry certificate at 2 failed");
    if (!(ln_enclosure(PosRational(Rational(3)), Precision(delta0)).bracket.lo() > one))
        throw std::logic_error("compute_e: entry certificate at 3 failed");

    Rational lo(2), hi(3);
    long iterations = 0;
    while (hi - lo > prec.eps) {
        const Rational mid = (lo + hi) / Rational(2);
        ++iterations;
        if (ln_below_one(mid, prec.eps / Rational(8)))
            lo = mid;
        else
            hi = mid;
    }
    return {Interval(lo, hi), iterations};
}

}  // namespace

EulerEnclosure compute_e(const Precision& prec) {
    {
        std::lock_guard<std::mutex> lock(e_memo_mutex);
        auto& memo = e_memo();
        if (!memo.empty() && memo.begin()->first <= prec.eps)
            return memo.begin()->second;  // tightest cached bracket qualifies
    }
    EulerEnclosure result = compute_e_uncached(prec);
    {
        std::lock_guard<std::mutex> lock(e_memo_mutex);
        e_memo().emplace(prec.eps, result);
    }
    return result;
}

SeriesState exp_series_state(const Rational& x, long terms) {
    if (terms < 0) throw std::invalid_argument("exp_series_state: negative term count");
    const Rational majorant =
        x.is_positive() ? int_pow(Rational(3), ceil_as_long(x)) : Rational(1);
    Rational sum(0);
    Rational term(1);
    for (long k = 0; k <= terms; ++k) {
        sum += term;
        term = term * x / Rational(k + 1);
    }
    return {x, sum, terms, majorant * term.abs()};
}

Interval exp_series(const Rational& x, const Precision& prec) {
    const Rational majorant =
        x.is_positive() ? int_pow(Rational(3), ceil_as_long(x)) : Rational(1);
    const Rational target = prec.eps / Rational(2);
    Rational sum(0);
    Rational term(1);
    for (long k = 0; k < 1000000; ++k) {
        sum += term;
        term = term * x / Rational(k + 1);
        const Rational remainder = majorant * term.abs();
        if (remainder <= target)
            return Interval(sum - remainder, sum + remainder);
    }
    throw std::logic_error("exp_series: term cap exceeded");
}

Interval exp_pow(const Rational& x, const Precision& prec) {
    if (x.is_zero()) return Interval(Rational(1));
    // First guess scales the budget by the output magnitude 3^ceil(x)
    // and the base sensitivity |x| * e^(x-1); verified and tightened below.
    long shift = 4;
    if (x.is_positive()) shift += 2 * (ceil_as_long(x) + 1);
    shift += static_cast<long>(mpz_sizeinbase(ceil(x.abs()).get_mpz_t(), 2));
    Rational delta = prec.eps * pow2(-shift);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const EulerEnclosure e = compute_e(Precision(delta));
        const Interval p = pow_interval_base(e.bracket, x, Precision(delta));
        if (p.width() <= prec.eps) return p;
        delta = delta / Rational(16);
    }
    throw std::logic_error("exp_pow: width target not reached");
}

Rational compound_value(const Rational& x, unsigned long n) {
    if (n == 0) throw std::invalid_argument("compound_value: n must be positive");
    if (n > static_cast<unsigned long>(std::numeric_limits<long>::max()))
        throw std::overflow_error("compound_value: n too large");
    const Rational base = Rational(1) + x / Rational(static_cast<long>(n));
    if (!base.is_positive())
        throw std::domain_error("compound_value: requires 1 + x/n > 0");
    return int_pow(base, static_cast<long>(n));
}

DerivativeBracket exp_derivative_bracket(const Rational& x0, unsigned k,
                                         const Precision& prec) {
    const Rational h = pow2(-static_cast<long>(k));
    const Precision vprec(prec.eps / Rational(8));
    const Precision qprec(prec.eps * h / Rational(8));
    const Interval value = exp_series(x0, vprec);
    const auto quotient = [&](const Rational& step) {
        return scale(shift(exp_series(step, qprec), Rational(-1)), step.reciprocal());
    };
    return {mul(value, quotient(-h)), value, mul(value, quotient(h))};
}

}  // namespace explog
