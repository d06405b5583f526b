#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "explog/euler.hpp"
#include "explog/quadrature.hpp"
#include "explog/verdict.hpp"

namespace explog {

/// Result of one named check: per-trial verdict counts plus the worst
/// verdict seen. `refined_*` carry the strict-separation statistics for
/// checks with a refine-then-certify phase.
struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::verified;
    long trials = 0;
    long verified = 0;
    long inconclusive = 0;
    long falsified = 0;
    long refined_candidates = 0;
    long refined_certified = 0;
    std::string note;

    void tally(Verdict v);
};

struct CrosscheckOptions {
    Precision prec{Rational(1, 1000000)};
    long trials = 500;
    std::uint64_t seed = 1;
};

// Identity and ordering sweeps over random rational triples. Disjoint
// enclosures of provably equal quantities are reported as falsified.
CheckResult check_pow_add_identity(const Precision&, long trials, std::uint64_t seed);
CheckResult check_pow_of_pow_identity(const Precision&, long trials, std::uint64_t seed);
CheckResult check_product_base_identity(const Precision&, long trials, std::uint64_t seed);
CheckResult check_exponent_monotonicity(const Precision&, long trials, std::uint64_t seed);
CheckResult check_power_positivity(const Precision&, long trials, std::uint64_t seed);
CheckResult check_unit_exponents(const Precision&, long trials, std::uint64_t seed);
CheckResult check_bernoulli_divergence(long trials, std::uint64_t seed);

// Mean and convexity inequalities.
CheckResult check_amgm(const Precision&, long trials, std::uint64_t seed);
CheckResult check_quotient_monotonicity(const Precision&, long trials, std::uint64_t seed);
CheckResult check_quotient_symmetry(const Precision&, long trials, std::uint64_t seed);
CheckResult check_convexity_midpoint(const Precision&, long trials, std::uint64_t seed);

// Logarithm construction.
CheckResult check_ln_stage_brackets(const Precision&, long trials, std::uint64_t seed);
CheckResult check_ln_strictly_increasing(const Precision&, long trials, std::uint64_t seed);
CheckResult check_ln_route_agreement(const Precision&);
CheckResult check_quotient_base_monotonicity(const Precision&, long trials, std::uint64_t seed);
CheckResult check_power_slope_brackets();
CheckResult check_log_slope_brackets(const Precision&);

// e and exp routes.
CheckResult check_exp_route_agreement();
CheckResult check_exp_remainder_soundness(long trials, std::uint64_t seed);
CheckResult check_compound_monotone();
CheckResult check_compound_error_decreasing();
CheckResult check_e_certificate(const Precision&);

// Quadrature.
CheckResult check_integral_gap_law(long trials, std::uint64_t seed);
CheckResult check_integral_additivity(const Precision&, long trials, std::uint64_t seed);

/// Runs every check above in declaration order. Check i draws from an
/// Lcg64 seeded with options.seed + i, so a fixed seed reproduces the
/// entire report byte for byte.
std::vector<CheckResult> run_crosscheck(const CrosscheckOptions& options);

}  // namespace explog
