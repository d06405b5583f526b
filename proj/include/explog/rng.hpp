#pragma once

#include <cstdint>

#include "explog/rational.hpp"

namespace explog {

/// Deliberately simple 64-bit linear congruential generator so that any
/// implementation, in any language, can reproduce the same trial set from
/// the same seed:
///
///   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
///   output = floor(state' / 2^32)   (the high 32 bits, as an unsigned int)
///
/// Derived draws are built only from next_u32() as documented on each
/// method; nothing else about the state leaks into results.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint32_t next_u32() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// next_u32() % bound (bound >= 1). The modulo bias is irrelevant for
    /// test-case generation and keeps the construction trivially portable.
    std::uint64_t next_below(std::uint64_t bound) {
        return next_u32() % bound;
    }

    /// Uniform-ish integer in [lo, hi], inclusive: lo + next_below(hi-lo+1).
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Rational with numerator in [-max_abs_num, max_abs_num] and
    /// denominator in [1, max_den]; numerator drawn first.
    Rational next_rational(long max_abs_num, long max_den) {
        const long num = next_int(-max_abs_num, max_abs_num);
        const long den = next_int(1, max_den);
        return Rational(num, den);
    }

    /// Strictly positive rational: numerator in [1, max_num], denominator
    /// in [1, max_den]; numerator drawn first.
    Rational next_positive_rational(long max_num, long max_den) {
        const long num = next_int(1, max_num);
        const long den = next_int(1, max_den);
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

}  // namespace explog
