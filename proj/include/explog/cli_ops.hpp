#pragma once

#include <optional>

#include "explog/crosscheck.hpp"
#include "explog/figures.hpp"

namespace explog {

/// One labeled line of deterministic command output.
struct OutputLine {
    std::string label;
    std::string text;
};

struct TimingLine {
    std::string label;
    long microseconds;
};

/// What a command produced: echoed invocation, deterministic output lines,
/// per-check verdicts (crosscheck only), and timings. Printing sends
/// everything except timings to stdout — so a fixed seed yields a
/// byte-identical stdout — and timings to stderr.
///
/// Exit codes: 0 success (inconclusive-only runs stay 0, with a warning
/// count), 1 any falsified verdict, 2 usage or domain errors.
struct RunReport {
    std::string command;
    std::vector<OutputLine> outputs;
    std::vector<CheckResult> checks;
    std::vector<TimingLine> timings;
    long warnings = 0;
    int exit_code = 0;
};

void print_report(const RunReport& report, std::ostream& out, std::ostream& err);

struct EvalRequest {
    std::string kind;  // pow | ln | log | exp | integral-ln | compound
    std::vector<std::string> args;
    Precision prec{Rational(1, 1000000)};
    std::optional<unsigned> digits;  // certify this many fractional digits
};

RunReport cmd_eval(const EvalRequest& request);

/// Prints e with `digits` certified fractional digits: the outward pair is
/// refined until both endpoints agree on that many digits. Also runs the
/// series and bisection routes independently and reports which was faster.
RunReport cmd_e(unsigned digits);

struct FiguresRequest {
    std::vector<std::string> bases = {"1/2", "2", "5", "e"};
    Rational x_min{-3};
    Rational x_max{3};
    int samples = 61;
    std::string format = "json";  // json | csv
    std::string out_path = "figures.json";
    Precision prec{Rational(1, 1000000)};
};

RunReport cmd_figures(const FiguresRequest& request);

RunReport cmd_crosscheck(const CrosscheckOptions& options);

}  // namespace explog
