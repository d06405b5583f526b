#include "explog/roots.hpp"

#include <vector>

namespace explog {

namespace {

// Exact power comparison is affordable while den(mid)^m stays small.
constexpr unsigned long kExactPowerLimit = 512;

// Outward dyadic rounding that never lets a strictly positive lower
// endpoint collapse to zero: if the floor would cross 0 the exact endpoint
// is kept (rounding is only a denominator-size optimization).
Interval outward_dyadic_pos(const Interval& a, unsigned long bits) {
    Rational lo = dyadic_floor(a.lo(), bits);
    if (!lo.is_positive()) lo = a.lo();
    return Interval(lo, dyadic_ceil(a.hi(), bits));
}

// Directed-rounding point power: encloses x^e (x > 0, e >= 1).
Interval pow_point_rounded(const Rational& x, unsigned long e, unsigned long bits) {
    Interval acc{Rational(1)};
    Interval sq{x};
    unsigned long rest = e;
    while (true) {
        if (rest & 1) acc = outward_dyadic_pos(mul_pos(acc, sq), bits);
        rest >>= 1;
        if (rest == 0) break;
        sq = outward_dyadic_pos(mul_pos(sq, sq), bits);
    }
    return acc;
}

// Sound three-way comparison of mid^m against x for mid, x > 0. Exact while
// cheap; otherwise escalates directed-rounding precision until one side is
// certified. Callers exclude the equality case up front (perfect-power
// check), so the escalation terminates.
int cmp_pow(const Rational& mid, unsigned long m, const Rational& x) {
    if (m <= kExactPowerLimit) {
        const Rational p = int_pow(mid, static_cast<long>(m));
        if (p < x) return -1;
        if (p > x) return 1;
        return 0;
    }
    for (unsigned long bits = 128; bits <= (1ul << 24); bits *= 2) {
        const Interval p = pow_point_rounded(mid, m, bits);
        if (p.hi() < x) return -1;
        if (p.lo() > x) return 1;
    }
    throw std::logic_error("nth_root: power comparison failed to resolve");
}

// Detects x = (r_num/r_den)^n exactly via integer n-th roots of the
// canonical numerator and denominator.
bool exact_root(const Rational& x, unsigned long n, Rational* out) {
    mpz_class rnum, rden;
    const bool num_exact =
        mpz_root(rnum.get_mpz_t(), x.numerator().get_mpz_t(), n) != 0;
    if (!num_exact) return false;
    const bool den_exact =
        mpz_root(rden.get_mpz_t(), x.denominator().get_mpz_t(), n) != 0;
    if (!den_exact) return false;
    *out = Rational(rnum, rden);
    return true;
}

// Bisection for the m-th root of a rational x >= 1 over [1, x].
Interval bisect_root_ge1(const Rational& x, unsigned long m, const Rational& delta,
                         long* steps) {
    Rational r;
    if (exact_root(x, m, &r)) return Interval(r);
    Rational lo(1), hi = x;
    while (hi - lo > delta) {
        const Rational mid = (lo + hi) / Rational(2);
        if (steps) ++*steps;
        const int c = cmp_pow(mid, m, x);
        if (c == 0) return Interval(mid);
        if (c < 0)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

// m-th root of an interval with endpoints >= 1 (monotone, so roots of the
// endpoints bracket the image).
Interval root_stage(const Interval& a, unsigned long m, const Rational& delta,
                    long* steps) {
    const Interval lo_r = bisect_root_ge1(a.lo(), m, delta, steps);
    if (a.is_point()) return lo_r;
    const Interval hi_r = bisect_root_ge1(a.hi(), m, delta, steps);
    return Interval(lo_r.lo(), hi_r.hi());
}

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Chain of prime-degree root stages for x >= 1. Every stage maps values
// >= 1 to values >= 1 and contracts absolute widths, so a fixed per-stage
// width target converges; the outer loop tightens it if the composed width
// still exceeds eps.
Interval nth_root_ge1(const Rational& x, unsigned long n, const Rational& eps,
                      long* steps) {
    const auto factors = prime_factors(n);
    Rational delta = eps / Rational(4);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Interval acc{x};
        const unsigned long bits = frac_bits_for(delta) + 16;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            acc = root_stage(acc, *it, delta, steps);
            if (!acc.is_point()) acc = outward_dyadic_pos(acc, bits);
        }
        if (acc.width() <= eps) return acc;
        delta = delta / Rational(16);
    }
    throw std::logic_error("nth_root: width target not reached");
}

}  // namespace

unsigned long frac_bits_for(const Rational& delta) {
    if (!delta.is_positive()) throw std::domain_error("frac_bits_for: delta must be > 0");
    const long num_bits =
        static_cast<long>(mpz_sizeinbase(delta.numerator().get_mpz_t(), 2));
    const long den_bits =
        static_cast<long>(mpz_sizeinbase(delta.denominator().get_mpz_t(), 2));
    const long b = den_bits - num_bits + 1;
    return b > 0 ? static_cast<unsigned long>(b) : 0;
}

Interval nth_root_counted(const Rational& x, unsigned long n, const Precision& prec,
                          long* steps) {
    if (n == 0) throw std::invalid_argument("nth_root: n must be positive");
    if (x.is_negative()) throw std::domain_error("nth_root: negative radicand");
    if (x.is_zero()) return Interval(Rational(0));
    if (n == 1 || x == Rational(1)) return Interval(x);
    Rational r;
    if (exact_root(x, n, &r)) return Interval(r);
    if (x > Rational(1)) return nth_root_ge1(x, n, prec.eps, steps);
    // 0 < x < 1: root the reciprocal (>= 1, where bisection contracts) and
    // flip. Both endpoints are >= 1, so reciprocation does not widen.
    const Interval r1 = nth_root_ge1(x.reciprocal(), n, prec.eps, steps);
    return recip_pos(r1);
}

Interval nth_root(const Rational& x, unsigned long n, const Precision& prec) {
    return nth_root_counted(x, n, prec, nullptr);
}

Interval int_pow_interval(const Interval& base, long p, unsigned long round_bits) {
    if (!base.strictly_positive())
        throw std::domain_error("int_pow_interval: base must be strictly positive");
    if (p == 0) return Interval(Rational(1));
    if (base.is_point()) return Interval(int_pow(base.lo(), p));
    const bool invert = p < 0;
    const auto e = static_cast<unsigned long>(invert ? -p : p);
    Interval acc{Rational(1)};
    Interval sq = base;
    unsigned long rest = e;
    while (true) {
        if (rest & 1) acc = outward_dyadic_pos(mul_pos(acc, sq), round_bits);
        rest >>= 1;
        if (rest == 0) break;
        sq = outward_dyadic_pos(mul_pos(sq, sq), round_bits);
    }
    return invert ? recip_pos(acc) : acc;
}

}  // namespace explog
