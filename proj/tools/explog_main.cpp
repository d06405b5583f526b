#include <iostream>

#include "CLI11.hpp"
#include "explog/cli_ops.hpp"

namespace {

int run_report(const explog::RunReport& report) {
    explog::print_report(report, std::cout, std::cerr);
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "explog -- guaranteed rational enclosures for powers, logarithms, e and exp.\n"
        "All arithmetic is exact; every printed decimal pair is outward-rounded, so\n"
        "the true value lies between the printed bounds."};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand(
        "eval", "Evaluate one quantity to a requested precision");
    std::string kind;
    std::vector<std::string> args;
    std::string eval_prec = "1e-6";
    unsigned eval_digits = 0;
    eval->add_option("kind", kind, "pow | ln | log | exp | integral-ln | compound")
        ->required()
        ->check(CLI::IsMember({"pow", "ln", "log", "exp", "integral-ln", "compound"}));
    eval->add_option("args", args, "rational arguments ('3/7', '2', '1.25', '1e-6')")
        ->expected(-1);
    eval->add_option("--prec", eval_prec, "absolute enclosure width target")
        ->capture_default_str();
    eval->add_option("--digits", eval_digits,
                     "certify this many fractional digits (implies a width target)");

    // e
    auto* e_cmd = app.add_subcommand("e", "Print certified digits of e");
    unsigned e_digits = 12;
    e_cmd->add_option("digits", e_digits, "number of certified fractional digits")
        ->capture_default_str();

    // figures
    auto* figures = app.add_subcommand(
        "figures", "Emit curve, lattice and tangent data for y = a^x");
    explog::FiguresRequest fig_request;
    std::vector<std::string> range_texts;
    std::string fig_prec = "1e-6";
    bool out_given = false;
    figures->add_option("--base", fig_request.bases, "curve bases (rationals or 'e')")
        ->capture_default_str();
    figures->add_option("--range", range_texts, "x range as two rationals (default -3 3)")
        ->expected(2);
    figures->add_option("--samples", fig_request.samples, "curve sample count")
        ->capture_default_str();
    figures->add_option("--format", fig_request.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    figures->add_option("--out", fig_request.out_path, "output path")
        ->each([&](const std::string&) { out_given = true; });
    figures->add_option("--prec", fig_prec, "tangent/curve enclosure width")
        ->capture_default_str();

    // crosscheck
    auto* crosscheck = app.add_subcommand(
        "crosscheck", "Run the full cross-validation suite (seeded, deterministic)");
    std::string cc_prec = "1e-6";
    long cc_trials = 500;
    std::uint64_t cc_seed = 1;
    crosscheck->add_option("--prec", cc_prec, "enclosure width for the sweeps")
        ->capture_default_str();
    crosscheck->add_option("--trials", cc_trials, "trials per randomized check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    crosscheck->add_option("--seed", cc_seed, "generator seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    try {
        if (app.got_subcommand(eval)) {
            explog::EvalRequest request;
            request.kind = kind;
            request.args = args;
            request.prec = explog::Precision::decimal(eval_prec);
            if (eval->count("--digits") > 0) {
                if (eval_digits < 1)
                    throw std::invalid_argument("--digits must be >= 1");
                request.digits = eval_digits;
            }
            return run_report(explog::cmd_eval(request));
        }
        if (app.got_subcommand(e_cmd)) {
            if (e_digits < 1) throw std::invalid_argument("e: digits must be >= 1");
            return run_report(explog::cmd_e(e_digits));
        }
        if (app.got_subcommand(figures)) {
            if (range_texts.size() == 2) {
                fig_request.x_min = explog::Rational::from_string(range_texts[0]);
                fig_request.x_max = explog::Rational::from_string(range_texts[1]);
            }
            fig_request.prec = explog::Precision::decimal(fig_prec);
            if (!out_given)
                fig_request.out_path =
                    fig_request.format == "csv" ? "figures.csv" : "figures.json";
            return run_report(explog::cmd_figures(fig_request));
        }
        explog::CrosscheckOptions options;
        options.prec = explog::Precision::decimal(cc_prec);
        options.trials = cc_trials;
        options.seed = cc_seed;
        return run_report(explog::cmd_crosscheck(options));
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
}
