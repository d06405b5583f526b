#pragma once

#include <optional>
#include <string>
#include <utility>

#include "explog/rational.hpp"

namespace explog {

/// Absolute-width target for an enclosure. Always absolute, never relative.
struct Precision {
    Rational eps;

    explicit Precision(Rational e) : eps(std::move(e)) {
        if (!eps.is_positive()) throw std::domain_error("Precision: eps must be > 0");
    }
    static Precision decimal(const std::string& text) {
        return Precision(Rational::from_string(text));
    }
};

/// Closed rational interval [lo, hi]. The universal carrier for values that
/// may be irrational: any operation that cannot be exact returns an Interval
/// guaranteed to contain the true result.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(Rational point) : lo_(point), hi_(std::move(point)) {}  // NOLINT: implicit by design
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }
    bool strictly_positive() const { return lo_.is_positive(); }
    bool strictly_negative() const { return hi_.is_negative(); }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    std::string to_string() const {
        return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
    }

private:
    Rational lo_, hi_;
};

Interval add(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
Interval sub(const Interval& a, const Interval& b);

/// Product of strictly positive intervals. Throws std::domain_error unless
/// both operands have lo > 0.
Interval mul_pos(const Interval& a, const Interval& b);

/// General product, any signs.
Interval mul(const Interval& a, const Interval& b);

/// Reciprocal of a strictly positive interval. Throws std::domain_error if
/// the operand is not strictly positive (in particular if it contains 0).
Interval recip_pos(const Interval& a);

/// Common subinterval, or std::nullopt when the operands are disjoint.
/// Emptiness is a first-class result, not an error: cross-check commands
/// report disjointness as a finding.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

Interval hull(const Interval& a, const Interval& b);

/// c * a for a rational scalar of any sign.
Interval scale(const Interval& a, const Rational& c);
/// a + c.
Interval shift(const Interval& a, const Rational& c);

/// Replaces each endpoint by the nearest dyadic rational with denominator
/// 2^bits, rounding lo down and hi up so containment is preserved. This is
/// the denominator-growth valve: deep iterations call it after every
/// enclosure-producing step.
Interval outward_dyadic(const Interval& a, unsigned long bits);

/// x printed at `digits` fractional digits, rounded toward -infinity.
std::string decimal_floor(const Rational& x, unsigned digits);
/// x printed at `digits` fractional digits, rounded toward +infinity.
std::string decimal_ceil(const Rational& x, unsigned digits);

/// Outward decimal pair: lo rounded down, hi rounded up. The true value
/// provably lies between the printed strings.
std::pair<std::string, std::string> to_decimal(const Interval& a, unsigned digits);

}  // namespace explog
