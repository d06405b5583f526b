#pragma once

#include <iosfwd>
#include <vector>

#include "explog/euler.hpp"

namespace explog {

/// A curve base: either an exact rational or the computed constant e.
struct FigureBase {
    bool is_euler = false;
    Rational value;  // meaningful only when !is_euler

    static FigureBase euler() { return {true, Rational(0)}; }
    static FigureBase rational(Rational v) { return {false, std::move(v)}; }
    std::string label() const { return is_euler ? "e" : value.to_string(); }
};

/// Sampled data for one curve y = a^x: exact lattice points at integer
/// exponents, enclosure samples along the curve, and the tangent line at
/// (0, 1), whose slope is the ln enclosure. Rational bases carry exact
/// lattice values; the e-based series has no lattice (its power at an
/// integer is already irrational).
struct LatticePoint {
    long n;
    Rational value;
};
struct CurveSample {
    Rational x;
    Interval y;
};
struct TangentLine {
    Interval slope;
    Rational intercept;  // fixed at 1: every curve passes through (0, 1)
};
struct FigureSeries {
    FigureBase base;
    std::vector<LatticePoint> lattice;
    std::vector<CurveSample> curve;
    TangentLine tangent;
};

FigureSeries make_figure_series(const FigureBase& base, const Rational& x_min,
                                const Rational& x_max, int samples,
                                const Precision& prec);

/// JSON schema: an array of objects {base, lattice: [{n, value}], curve:
/// [{x, lo, hi}], tangent: {slope_lo, slope_hi, intercept}}, every number
/// an exact rational string so files round-trip bit for bit.
void write_figures_json(const std::vector<FigureSeries>& series, std::ostream& os);
std::vector<FigureSeries> read_figures_json(std::istream& is);

/// Flat row-per-sample projection: base,kind,x,lo,hi with kind one of
/// lattice|curve|tangent (tangent rows leave x empty and put the slope in
/// lo/hi).
void write_figures_csv(const std::vector<FigureSeries>& series, std::ostream& os);

}  // namespace explog
