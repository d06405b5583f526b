#include "explog/powers.hpp"

namespace explog {

namespace {

long exponent_as_long(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + ": exponent numerator too large");
    return v.get_si();
}

unsigned long exponent_den_as_ulong(const mpz_class& v) {
    if (!v.fits_ulong_p()) throw std::overflow_error("pow_rat: exponent denominator too large");
    return v.get_ui();
}

// bit-length of |v|, at least 1
long bitlen(const mpz_class& v) {
    return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

}  // namespace

Interval pow_rat(const PosRational& a, const Rational& q, const Precision& prec) {
    if (q.is_zero() || a.value == Rational(1)) return Interval(Rational(1));

    Rational base = a.value;
    long p = exponent_as_long(q.numerator(), "pow_rat");
    const unsigned long n = exponent_den_as_ulong(q.denominator());
    if (base < Rational(1)) {
        base = base.reciprocal();
        p = -p;
    }
    const bool invert = p < 0;
    const long e = invert ? -p : p;

    if (n == 1) return Interval(int_pow(base, p));  // exact

    // First guess for the root width from the derivative of r^e at
    // r <= base^(1/n): d(r^e) ~ e * base^((e-1)/n) * dr. Estimated in bit
    // sizes; the verify-and-tighten loop below makes it safe regardless.
    const long log2_base = bitlen(base.numerator()) - bitlen(base.denominator()) + 1;
    long shift = 2 + bitlen(mpz_class(e));
    if (e > 1 && log2_base > 0)
        shift += ((e - 1) * log2_base) / static_cast<long>(n) + 1;
    if (shift > (1L << 20)) shift = 1L << 20;
    Rational delta = prec.eps * pow2(-shift);

    for (int attempt = 0; attempt < 64; ++attempt) {
        const Interval root = nth_root(base, n, Precision(delta));
        Interval powed = (e == 1) ? root
                                  : int_pow_interval(root, e, frac_bits_for(delta) + 16);
        if (invert) powed = recip_pos(powed);  // endpoints >= 1, so this narrows
        if (powed.width() <= prec.eps) return powed;
        delta = delta / Rational(16);
    }
    throw std::logic_error("pow_rat: width target not reached");
}

Interval pow_interval_base(const Interval& base, const Rational& q, const Precision& prec) {
    if (!base.strictly_positive())
        throw std::domain_error("pow_interval_base: base must be strictly positive");
    if (q.is_zero()) return Interval(Rational(1));

    const Precision half(prec.eps / Rational(2));
    const Interval at_lo = pow_rat(PosRational(base.lo()), q, half);
    if (base.is_point()) return at_lo;
    const Interval at_hi = pow_rat(PosRational(base.hi()), q, half);
    return q.is_positive() ? Interval(at_lo.lo(), at_hi.hi())
                           : Interval(at_hi.lo(), at_lo.hi());
}

std::vector<Rational> power_lower_samples(const PosRational& a, const Rational& x,
                                          int count) {
    if (a.value <= Rational(1))
        throw std::domain_error("power_lower_samples: base must exceed 1");
    if (count < 1) throw std::invalid_argument("power_lower_samples: count must be >= 1");

    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 1; i <= count; ++i) {
        const Rational qi = x - pow2(-i);
        const Interval e = pow_rat(a, qi, Precision(pow2(-(i + 2))));
        Rational v = e.lo();
        // a^{q_i} is increasing in i, so the previous certified lower bound
        // remains one; taking the max keeps the list monotone.
        if (!out.empty() && v < out.back()) v = out.back();
        out.push_back(v);
    }
    return out;
}

}  // namespace explog
