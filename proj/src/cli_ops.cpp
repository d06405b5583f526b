#include "explog/cli_ops.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace explog {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_us(Clock::time_point t0) {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count());
}

/// Smallest digit count d with 10^-d <= eps, plus one guard digit.
unsigned digits_for(const Rational& eps) {
    const mpz_class inv = ceil(eps.reciprocal());
    const auto d = mpz_sizeinbase(inv.get_mpz_t(), 10);
    return static_cast<unsigned>(d) + 1;
}

/// Outward pair at (digits + 2) fractional digits; the pair "agrees on
/// `digits` digits" when the two strings share everything except the two
/// guard digits. Returns the common prefix when they do.
std::optional<std::string> agreed_prefix(const Interval& i, unsigned digits) {
    const std::string lo = decimal_floor(i.lo(), digits + 2);
    const std::string hi = decimal_ceil(i.hi(), digits + 2);
    if (lo.size() != hi.size()) return std::nullopt;
    const std::string lo_prefix = lo.substr(0, lo.size() - 2);
    if (lo_prefix != hi.substr(0, hi.size() - 2)) return std::nullopt;
    return lo_prefix;
}

void push_enclosure(RunReport& report, const std::string& label, const Interval& value,
                    unsigned digits) {
    const std::string exact =
        "[" + value.lo().to_string() + ", " + value.hi().to_string() + "]";
    if (exact.size() <= 80) report.outputs.push_back({label + " exact", exact});
    const auto [lo, hi] = to_decimal(value, digits);
    report.outputs.push_back({label + " outward", lo + " .. " + hi});
    report.outputs.push_back(
        {label + " width", value.is_point()
                               ? std::string("0 (exact)")
                               : "<= " + decimal_ceil(value.width(), digits + 4)});
}

std::string check_line(const CheckResult& c) {
    std::ostringstream os;
    os << "[" << to_string(c.verdict) << "] " << c.name << " trials=" << c.trials
       << " verified=" << c.verified << " inconclusive=" << c.inconclusive
       << " falsified=" << c.falsified;
    if (c.refined_candidates > 0)
        os << " strict=" << c.refined_certified << "/" << c.refined_candidates;
    if (!c.note.empty()) os << " " << c.note;
    return os.str();
}

// A provably-equal pair of routes produced disjoint enclosures: that is a
// falsification finding, reported with exit code 1 rather than a crash.
struct RouteDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational_arg(const std::string& text, const char* what) {
    try {
        return Rational::from_string(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a rational: '" + text + "'");
    }
}

void require_args(const EvalRequest& r, size_t n) {
    if (r.args.size() != n)
        throw std::invalid_argument("eval " + r.kind + ": expected " + std::to_string(n) +
                                    " argument(s), got " + std::to_string(r.args.size()));
}

}  // namespace

void print_report(const RunReport& report, std::ostream& out, std::ostream& err) {
    out << "# " << report.command << "\n";
    for (const auto& line : report.outputs) out << line.label << ": " << line.text << "\n";
    for (const auto& check : report.checks) out << check_line(check) << "\n";
    if (report.warnings > 0)
        out << "warnings: " << report.warnings << " inconclusive verdict(s)\n";
    for (const auto& t : report.timings)
        err << t.label << ": " << t.microseconds / 1000 << "." << std::setw(3)
            << std::setfill('0') << t.microseconds % 1000 << " ms\n";
}

RunReport cmd_eval(const EvalRequest& request) {
    RunReport report;
    {
        std::ostringstream echo;
        echo << "eval " << request.kind;
        for (const auto& a : request.args) echo << " " << a;
        echo << " --prec " << request.prec.eps.to_string();
        if (request.digits) echo << " --digits " << *request.digits;
        report.command = echo.str();
    }
    const auto t0 = Clock::now();

    Precision prec = request.prec;
    if (request.digits) {
        // --digits n implies width <= 10^-n (and digit agreement below).
        Rational dec_eps(1);
        for (unsigned i = 0; i < *request.digits; ++i) dec_eps = dec_eps / Rational(10);
        prec = Precision(min(prec.eps, dec_eps));
    }
    const unsigned out_digits = request.digits ? *request.digits + 2 : digits_for(prec.eps);

    const auto evaluate = [&](const Precision& p) -> Interval {
        if (request.kind == "pow") {
            require_args(request, 2);
            return pow_rat(PosRational(parse_rational_arg(request.args[0], "base")),
                           parse_rational_arg(request.args[1], "exponent"), p);
        }
        if (request.kind == "ln") {
            require_args(request, 1);
            return ln_enclosure(PosRational(parse_rational_arg(request.args[0], "argument")), p)
                .bracket;
        }
        if (request.kind == "log") {
            require_args(request, 2);
            const Interval base =
                request.args[0] == "e"
                    ? compute_e(Precision(p.eps / Rational(8))).bracket
                    : Interval(parse_rational_arg(request.args[0], "base"));
            return log_enclosure(base,
                                 PosRational(parse_rational_arg(request.args[1], "argument")), p);
        }
        if (request.kind == "exp") {
            require_args(request, 1);
            const Rational x = parse_rational_arg(request.args[0], "exponent");
            const Interval series = exp_series(x, p);
            const Interval powered = exp_pow(x, p);
            const auto agreed = intersect(series, powered);
            if (!agreed)
                throw RouteDisagreement("exp: series and power enclosures are disjoint");
            return *agreed;
        }
        if (request.kind == "integral-ln") {
            require_args(request, 1);
            return ln_integral(PosRational(parse_rational_arg(request.args[0], "argument")), p);
        }
        if (request.kind == "compound") {
            require_args(request, 2);
            const Rational x = parse_rational_arg(request.args[0], "rate");
            const Rational n = parse_rational_arg(request.args[1], "steps");
            if (!n.is_integer() || !n.is_positive() || !n.numerator().fits_ulong_p())
                throw std::invalid_argument("compound: steps must be a positive integer");
            return Interval(compound_value(x, n.numerator().get_ui()));
        }
        throw std::invalid_argument("eval: unknown kind '" + request.kind + "'");
    };

    Interval value{Rational(0)};
    try {
        value = evaluate(prec);
    } catch (const RouteDisagreement& rd) {
        report.outputs.push_back({"FALSIFIED", rd.what()});
        report.exit_code = 1;
        report.timings.push_back({"eval", elapsed_us(t0)});
        return report;
    }
    if (request.digits) {
        // Outward digit agreement: tighten until the printed pair shares
        // its first `digits` fractional digits.
        Precision p = prec;
        for (int round = 0; round < 6 && !agreed_prefix(value, *request.digits); ++round) {
            p = Precision(p.eps / Rational(100));
            value = evaluate(p);
        }
        const auto prefix = agreed_prefix(value, *request.digits);
        if (!prefix)
            throw EnclosureDiagnostic("eval: digit agreement not reached", value, 6);
        report.outputs.push_back({"certified digits", *prefix});
    }
    push_enclosure(report, "enclosure", value, out_digits);
    report.timings.push_back({"eval", elapsed_us(t0)});
    return report;
}

RunReport cmd_e(unsigned digits) {
    if (digits < 1) throw std::invalid_argument("e: digits must be >= 1");
    RunReport report;
    report.command = "e " + std::to_string(digits);

    Rational eps(1);
    for (unsigned i = 0; i < digits + 2; ++i) eps = eps / Rational(10);

    long series_us = 0;
    long bisect_us = 0;
    for (int round = 0; round < 6; ++round) {
        const auto t_series = Clock::now();
        const Interval series = exp_series(Rational(1), Precision(eps));
        series_us = elapsed_us(t_series);
        const auto t_bisect = Clock::now();
        const Interval bisect = compute_e(Precision(eps)).bracket;
        bisect_us = elapsed_us(t_bisect);

        const auto agreed = intersect(series, bisect);
        if (!agreed) {
            report.outputs.push_back(
                {"FALSIFIED", "e: series and bisection enclosures are disjoint"});
            report.exit_code = 1;
            return report;
        }
        if (const auto prefix = agreed_prefix(*agreed, digits)) {
            report.outputs.push_back({"e", *prefix});
            push_enclosure(report, "enclosure", *agreed, digits + 2);
            report.timings.push_back({"series route", series_us});
            report.timings.push_back({"bisection route", bisect_us});
            const bool series_faster = series_us <= bisect_us;
            report.timings.push_back(
                {std::string("faster route: ") + (series_faster ? "series" : "bisection"),
                 series_faster ? series_us : bisect_us});
            return report;
        }
        eps = eps / Rational(100);
    }
    throw EnclosureDiagnostic("e: digit agreement not reached",
                              compute_e(Precision(eps)).bracket, 6);
}

RunReport cmd_figures(const FiguresRequest& request) {
    RunReport report;
    {
        std::ostringstream echo;
        echo << "figures --format " << request.format << " --out " << request.out_path
             << " --samples " << request.samples << " --range "
             << request.x_min.to_string() << " " << request.x_max.to_string() << " --prec "
             << request.prec.eps.to_string() << " --base";
        for (const auto& b : request.bases) echo << " " << b;
        report.command = echo.str();
    }
    if (request.format != "json" && request.format != "csv")
        throw std::invalid_argument("figures: format must be json or csv");

    const auto t0 = Clock::now();
    std::vector<FigureSeries> series;
    for (const auto& text : request.bases) {
        const FigureBase base = text == "e"
                                    ? FigureBase::euler()
                                    : FigureBase::rational(parse_rational_arg(text, "base"));
        series.push_back(
            make_figure_series(base, request.x_min, request.x_max, request.samples, request.prec));
    }

    std::ofstream file(request.out_path);
    if (!file) throw std::runtime_error("figures: cannot open '" + request.out_path + "'");
    if (request.format == "json")
        write_figures_json(series, file);
    else
        write_figures_csv(series, file);
    file.flush();
    if (!file) throw std::runtime_error("figures: write failed on '" + request.out_path + "'");

    const unsigned digits = digits_for(request.prec.eps);
    for (const auto& s : series) {
        std::ostringstream line;
        line << "lattice points " << s.lattice.size() << ", curve samples "
             << s.curve.size() << ", tangent slope midpoint "
             << decimal_floor(s.tangent.slope.midpoint(), digits) << " width <= "
             << decimal_ceil(s.tangent.slope.width(), digits + 4);
        report.outputs.push_back({"base " + s.base.label(), line.str()});
    }
    report.outputs.push_back({"written", request.out_path});
    report.timings.push_back({"figures", elapsed_us(t0)});
    return report;
}

RunReport cmd_crosscheck(const CrosscheckOptions& options) {
    RunReport report;
    report.command = "crosscheck --prec " + options.prec.eps.to_string() + " --trials " +
                     std::to_string(options.trials) + " --seed " + std::to_string(options.seed);
    const auto t0 = Clock::now();
    report.checks = run_crosscheck(options);

    long falsified = 0;
    for (const auto& c : report.checks) {
        report.warnings += c.inconclusive;
        falsified += c.falsified;
    }
    std::ostringstream summary;
    summary << report.checks.size() << " checks, " << falsified << " falsified, "
            << report.warnings << " inconclusive";
    report.outputs.push_back({"summary", summary.str()});
    report.exit_code = falsified > 0 ? 1 : 0;
    report.timings.push_back({"crosscheck", elapsed_us(t0)});
    return report;
}

}  // namespace explog
