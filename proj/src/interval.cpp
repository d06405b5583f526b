#include "explog/interval.hpp"

#include <algorithm>

namespace explog {

Interval add(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval neg(const Interval& a) {
    return Interval(-a.hi(), -a.lo());
}

Interval sub(const Interval& a, const Interval& b) {
    return add(a, neg(b));
}

Interval mul_pos(const Interval& a, const Interval& b) {
    if (!a.strictly_positive() || !b.strictly_positive())
        throw std::domain_error("mul_pos: operands must be strictly positive");
    return Interval(a.lo() * b.lo(), a.hi() * b.hi());
}

Interval mul(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo() * b.lo();
    const Rational p2 = a.lo() * b.hi();
    const Rational p3 = a.hi() * b.lo();
    const Rational p4 = a.hi() * b.hi();
    return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Interval recip_pos(const Interval& a) {
    if (!a.strictly_positive())
        throw std::domain_error("recip_pos: operand must be strictly positive");
    return Interval(a.hi().reciprocal(), a.lo().reciprocal());
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const Rational lo = max(a.lo(), b.lo());
    const Rational hi = min(a.hi(), b.hi());
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Interval scale(const Interval& a, const Rational& c) {
    if (c.is_negative()) return Interval(a.hi() * c, a.lo() * c);
    return Interval(a.lo() * c, a.hi() * c);
}

Interval shift(const Interval& a, const Rational& c) {
    return Interval(a.lo() + c, a.hi() + c);
}

Interval outward_dyadic(const Interval& a, unsigned long bits) {
    return Interval(dyadic_floor(a.lo(), bits), dyadic_ceil(a.hi(), bits));
}

namespace {

std::string format_scaled(const mpz_class& scaled, unsigned digits) {
    const bool neg = scaled < 0;
    std::string body = mpz_class(abs(scaled)).get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    if (digits > 0) body.insert(body.size() - digits, ".");
    return neg ? "-" + body : body;
}

mpz_class scale_pow10(const Rational& x, unsigned digits, bool round_up) {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
    mpz_class num = x.numerator() * p10;
    mpz_class q;
    if (round_up)
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.denominator().get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.denominator().get_mpz_t());
    return q;
}

}  // namespace

std::string decimal_floor(const Rational& x, unsigned digits) {
    return format_scaled(scale_pow10(x, digits, false), digits);
}

std::string decimal_ceil(const Rational& x, unsigned digits) {
    return format_scaled(scale_pow10(x, digits, true), digits);
}

std::pair<std::string, std::string> to_decimal(const Interval& a, unsigned digits) {
    return {decimal_floor(a.lo(), digits), decimal_ceil(a.hi(), digits)};
}

}  // namespace explog
