#include "explog/quadrature.hpp"

#include <cstdint>

namespace explog {

namespace {

// Scale factor for the directed-rounding accumulation: each of the N
// shared terms is floored (lower) or ceiled (upper) at 96 fractional bits,
// so the total slack is under N * 2^-96 — vanishing against any practical
// eps while keeping every iteration integer-only.
constexpr unsigned long kShiftBits = 96;

// With x - 1 = u/v in lowest terms and N subintervals of [1, x], the i-th
// right-endpoint term of the lower sum is u/(vN + iu); the upper sum uses
// i = 0..N-1. The two sums share i = 1..N-1, so one pass accumulates both.
struct SharedSums {
    mpz_class floor_acc;  // lower-rounded sum of the shared terms
    mpz_class ceil_acc;   // upper-rounded sum of the shared terms
};

SharedSums accumulate_shared(const mpz_class& u, const mpz_class& c, unsigned long n) {
    SharedSums out{0, 0};
    if (n < 2) return out;

    const mpz_class scaled_num = u << kShiftBits;
    const mpz_class d_max = c + u * static_cast<long>(n);

#ifdef __SIZEOF_INT128__
    if (mpz_sizeinbase(scaled_num.get_mpz_t(), 2) <= 126 && d_max.fits_ulong_p() &&
        u.fits_ulong_p() && c.fits_ulong_p()) {
        unsigned __int128 num = 0;
        for (size_t limb = mpz_size(scaled_num.get_mpz_t()); limb-- > 0;)
            num = (num << 64) | mpz_getlimbn(scaled_num.get_mpz_t(), limb);
        const std::uint64_t uu = u.get_ui();
        std::uint64_t d = c.get_ui();
        unsigned __int128 lo_acc = 0, hi_acc = 0;
        std::uint64_t extra = 0;  // count of inexact divisions (ceil carries)
        for (unsigned long i = 1; i < n; ++i) {
            d += uu;
            const unsigned __int128 q = num / d;
            lo_acc += q;
            hi_acc += q;
            if (num - q * d != 0) ++extra;
        }
        hi_acc += extra;
        const auto to_mpz = [](unsigned __int128 v) {
            mpz_class out_v(static_cast<unsigned long>(v >> 64));
            out_v <<= 64;
            out_v += static_cast<unsigned long>(v & ~std::uint64_t(0));
            return out_v;
        };
        out.floor_acc = to_mpz(lo_acc);
        out.ceil_acc = to_mpz(hi_acc);
        return out;
    }
#endif
    mpz_class d = c;
    mpz_class q, r;
    for (unsigned long i = 1; i < n; ++i) {
        d += u;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), d.get_mpz_t());
        out.floor_acc += q;
        out.ceil_acc += q;
        if (r != 0) out.ceil_acc += 1;
    }
    return out;
}

// Lower/upper Riemann pair for x in (1, 2] at the given subinterval count,
// with directed rounding of the shared interior terms. The two boundary
// terms are kept exact.
Interval riemann_pair_rounded(const Rational& x, unsigned long n) {
    const Rational xm1 = x - Rational(1);
    const mpz_class& u = xm1.numerator();
    const mpz_class c = xm1.denominator() * static_cast<long>(n);
    const SharedSums sums = accumulate_shared(u, c, n);

    const Rational scale_den{mpz_class(mpz_class(1) << kShiftBits)};
    const Rational last(u, c + u * static_cast<long>(n));  // i = N term (lower only)
    const Rational first(u, c);                            // i = 0 term (upper only)
    const Rational lower = Rational(sums.floor_acc) / scale_den + last;
    const Rational upper = Rational(sums.ceil_acc) / scale_den + first;
    return Interval(lower, upper);
}

Interval ln_integral_core(const Rational& x, const Rational& eps) {
    // Exact gap law: gap = (x-1)(1 - 1/x)/N. Choose N so the gap leaves
    // headroom for the 2^-96-per-term rounding slack.
    const Rational gap_target = eps * Rational(7, 8);
    const Rational spread = (x - Rational(1)) * (Rational(1) - x.reciprocal());
    const mpz_class n_z = ceil(spread / gap_target);
    if (!n_z.fits_ulong_p())
        throw std::overflow_error("ln_integral: subinterval count out of range");
    const unsigned long n = n_z.get_ui() == 0 ? 1 : n_z.get_ui();
    return riemann_pair_rounded(x, n);
}

}  // namespace

RiemannEnclosure riemann_sums(const PosRational& x, unsigned long subintervals) {
    if (subintervals == 0)
        throw std::invalid_argument("riemann_sums: subinterval count must be positive");
    if (x.value <= Rational(1))
        throw std::domain_error("riemann_sums: requires x > 1");

    const Rational xm1 = x.value - Rational(1);
    const mpz_class& u = xm1.numerator();
    const mpz_class c = xm1.denominator() * static_cast<long>(subintervals);

    Rational shared(0);
    mpz_class d = c;
    for (unsigned long i = 1; i < subintervals; ++i) {
        d += u;
        shared += Rational(u, d);
    }
    const Rational lower = shared + Rational(u, c + u * static_cast<long>(subintervals));
    const Rational upper = shared + Rational(u, c);
    return {x.value, subintervals, lower, upper};
}

Interval ln_integral(const PosRational& x, const Precision& prec) {
    const Rational& xv = x.value;
    if (xv == Rational(1)) return Interval(Rational(0));
    if (xv < Rational(1))
        return neg(ln_integral(PosRational(xv.reciprocal()), prec));

    // Range reduction: ln x = ln(x / 2^k) + k ln 2 with x / 2^k in (1, 2],
    // keeping the subinterval count polynomial in 1/eps instead of in x.
    long k = 0;
    Rational y = xv;
    while (y > Rational(2)) {
        y = y / Rational(2);
        ++k;
    }
    if (k == 0) return ln_integral_core(y, prec.eps);

    const Interval part = ln_integral_core(y, prec.eps / Rational(2));
    const Interval ln2 = ln_integral_core(Rational(2), prec.eps / Rational(2 * k));
    return add(part, scale(ln2, Rational(k)));
}

}  // namespace explog
