#pragma once

#include <string>

namespace explog {

/// Outcome of an enclosure-level inequality check. Enclosures may overlap
/// without deciding an inequality, so checks are three-valued: only
/// `falsified` indicates a defect; `inconclusive` means the precision did
/// not separate the enclosures.
enum class Verdict { verified, inconclusive, falsified };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::falsified: return "falsified";
    }
    return "?";
}

/// Severity order: verified < inconclusive < falsified.
inline Verdict worst(Verdict a, Verdict b) {
    return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

}  // namespace explog
