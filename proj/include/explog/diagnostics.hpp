#pragma once

#include <stdexcept>

#include "explog/interval.hpp"

namespace explog {

/// Raised when an iteration cap converts a refinement that failed to reach
/// its target into an explicit failure instead of a silent hang. Carries
/// the best enclosure obtained so far.
class EnclosureDiagnostic : public std::runtime_error {
public:
    EnclosureDiagnostic(const std::string& what, Interval best_bracket, long iterations)
        : std::runtime_error(what + " (best bracket " + best_bracket.to_string() +
                             " after " + std::to_string(iterations) + " iterations)"),
          best(std::move(best_bracket)),
          iterations(iterations) {}

    Interval best;
    long iterations;
};

}  // namespace explog
