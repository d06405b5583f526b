#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace explog {

/// Exact arbitrary-precision rational number, always kept in canonical
/// form: denominator > 0 and gcd(|numerator|, denominator) = 1.
///
/// This is the only scalar type in the library. There is no floating
/// point anywhere; irrational quantities are represented downstream as
/// closed intervals with Rational endpoints.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, lets 0/1 literals convert
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p/q", an integer, or a terminating decimal with optional
    /// exponent ("3/7", "-12", "1.25", "1e-6"). Throws std::invalid_argument
    /// on anything else; repeating-decimal notation is deliberately not
    /// accepted.
    static Rational from_string(std::string_view text);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_negative() const { return sign() < 0; }
    bool is_positive() const { return sign() > 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(tag_canonical{}, -v_); }
    Rational abs() const { return is_negative() ? -*this : *this; }

    /// Throws std::domain_error on zero.
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(tag_canonical{}, mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(tag_canonical{}, mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(tag_canonical{}, mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    /// "p/q" for non-integers, "p" otherwise. Round-trips through from_string.
    std::string to_string() const;

    const mpq_class& raw() const { return v_; }

private:
    struct tag_canonical {};
    Rational(tag_canonical, mpq_class v) : v_(std::move(v)) {}

    // mpq_class arithmetic results are already canonical; construction from
    // separate integers is not and goes through canonicalize().
    friend Rational make_canonical_unchecked(mpz_class num, mpz_class den);

    mpq_class v_;
};

/// Builds a Rational from parts already known to be coprime with den > 0,
/// skipping the gcd. Internal fast path for powers of coprime pairs.
Rational make_canonical_unchecked(mpz_class num, mpz_class den);

/// Exact x^n for integer n (x^0 = 1). Throws std::domain_error for 0^n, n < 0.
Rational int_pow(const Rational& x, long n);

mpz_class floor(const Rational& x);
mpz_class ceil(const Rational& x);

/// 2^k as an exact rational; k may be negative.
Rational pow2(long k);

/// Largest dyadic rational with denominator 2^bits that is <= x.
Rational dyadic_floor(const Rational& x, unsigned long bits);
/// Smallest dyadic rational with denominator 2^bits that is >= x.
Rational dyadic_ceil(const Rational& x, unsigned long bits);

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace explog
