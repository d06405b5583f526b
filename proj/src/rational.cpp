#include "explog/rational.hpp"

#include <cctype>
#include <ostream>

namespace explog {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational make_canonical_unchecked(mpz_class num, mpz_class den) {
    mpq_class q;
    q.get_num() = std::move(num);
    q.get_den() = std::move(den);
    return Rational(Rational::tag_canonical{}, std::move(q));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(tag_canonical{}, std::move(r));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(Rational::tag_canonical{}, mpq_class(a.v_ / b.v_));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("Rational: malformed integer");
    mpz_class v(std::string(s), 10);
    return neg ? mpz_class(-v) : v;
}

// mantissa[.fraction][(e|E)exponent]
Rational parse_decimal(std::string_view s) {
    long exp10 = 0;
    const auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        const auto etext = s.substr(epos + 1);
        mpz_class e = parse_integer(etext);
        if (!e.fits_slong_p()) throw std::invalid_argument("Rational: exponent out of range");
        exp10 = e.get_si();
        s = s.substr(0, epos);
    }
    std::string digits;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(s)) throw std::invalid_argument("Rational: malformed number");
        digits = std::string(s);
    } else {
        const auto whole = s.substr(0, dot);
        const auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw std::invalid_argument("Rational: malformed number");
        if (!whole.empty() && !all_digits(whole))
            throw std::invalid_argument("Rational: malformed number");
        if (!frac.empty() && !all_digits(frac))
            throw std::invalid_argument("Rational: malformed number");
        digits = std::string(whole) + std::string(frac);
        exp10 -= static_cast<long>(frac.size());
    }
    if (digits.empty()) throw std::invalid_argument("Rational: malformed number");
    mpz_class mant(digits, 10);
    if (neg) mant = -mant;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0) return Rational(mpz_class(mant * p10));
    return Rational(mant, p10);
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(num, den);
    }
    return parse_decimal(text);
}

std::string Rational::to_string() const {
    return is_integer() ? numerator().get_str()
                        : numerator().get_str() + "/" + denominator().get_str();
}

Rational int_pow(const Rational& x, long n) {
    if (n == 0) return Rational(1);
    if (x.is_zero()) {
        if (n < 0) throw std::domain_error("int_pow: zero base with negative exponent");
        return Rational(0);
    }
    const Rational base = n < 0 ? x.reciprocal() : x;
    const auto e = static_cast<unsigned long>(n < 0 ? -n : n);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    // powers of a coprime pair stay coprime
    return make_canonical_unchecked(std::move(num), std::move(den));
}

mpz_class floor(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return q;
}

mpz_class ceil(const Rational& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return q;
}

Rational pow2(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational dyadic_floor(const Rational& x, unsigned long bits) {
    mpz_class scaled = x.numerator() << bits;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    return Rational(q, den);
}

Rational dyadic_ceil(const Rational& x, unsigned long bits) {
    mpz_class scaled = x.numerator() << bits;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    return Rational(q, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
}

}  // namespace explog
