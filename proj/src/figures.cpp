#include "explog/figures.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace explog {

FigureSeries make_figure_series(const FigureBase& base, const Rational& x_min,
                                const Rational& x_max, int samples,
                                const Precision& prec) {
    if (x_min > x_max) throw std::invalid_argument("figures: empty x range");
    if (samples < 2) throw std::invalid_argument("figures: need at least 2 samples");

    FigureSeries out;
    out.base = base;

    if (!base.is_euler) {
        if (!base.value.is_positive())
            throw std::domain_error("figures: base must be positive");
        const long n_lo = ceil(x_min).get_si();
        const long n_hi = floor(x_max).get_si();
        for (long n = n_lo; n <= n_hi; ++n)
            out.lattice.push_back({n, int_pow(base.value, n)});
    }

    const Rational span = x_max - x_min;
    for (int j = 0; j < samples; ++j) {
        const Rational x = x_min + span * Rational(j) / Rational(samples - 1);
        const Interval y = base.is_euler
                               ? exp_pow(x, prec)
                               : pow_rat(PosRational(base.value), x, prec);
        out.curve.push_back({x, y});
    }

    if (base.is_euler) {
        // Slope of e^x at (0, 1) is ln e = 1; the computed enclosure is the
        // hull of ln over the e bracket and must contain 1.
        const Interval e = compute_e(prec).bracket;
        out.tangent = {ln_interval(e, prec), Rational(1)};
    } else {
        out.tangent = {ln_enclosure(PosRational(base.value), prec).bracket, Rational(1)};
    }
    return out;
}

namespace {

using nlohmann::json;

json series_to_json(const FigureSeries& s) {
    json lattice = json::array();
    for (const auto& p : s.lattice)
        lattice.push_back({{"n", p.n}, {"value", p.value.to_string()}});
    json curve = json::array();
    for (const auto& c : s.curve)
        curve.push_back({{"x", c.x.to_string()},
                         {"lo", c.y.lo().to_string()},
                         {"hi", c.y.hi().to_string()}});
    return json{{"base", s.base.label()},
                {"lattice", lattice},
                {"curve", curve},
                {"tangent",
                 {{"slope_lo", s.tangent.slope.lo().to_string()},
                  {"slope_hi", s.tangent.slope.hi().to_string()},
                  {"intercept", s.tangent.intercept.to_string()}}}};
}

FigureSeries series_from_json(const json& j) {
    FigureSeries s;
    const auto base_text = j.at("base").get<std::string>();
    s.base = base_text == "e" ? FigureBase::euler()
                              : FigureBase::rational(Rational::from_string(base_text));
    for (const auto& p : j.at("lattice"))
        s.lattice.push_back(
            {p.at("n").get<long>(), Rational::from_string(p.at("value").get<std::string>())});
    for (const auto& c : j.at("curve"))
        s.curve.push_back({Rational::from_string(c.at("x").get<std::string>()),
                           Interval(Rational::from_string(c.at("lo").get<std::string>()),
                                    Rational::from_string(c.at("hi").get<std::string>()))});
    const auto& t = j.at("tangent");
    s.tangent = {Interval(Rational::from_string(t.at("slope_lo").get<std::string>()),
                          Rational::from_string(t.at("slope_hi").get<std::string>())),
                 Rational::from_string(t.at("intercept").get<std::string>())};
    return s;
}

}  // namespace

void write_figures_json(const std::vector<FigureSeries>& series, std::ostream& os) {
    json arr = json::array();
    for (const auto& s : series) arr.push_back(series_to_json(s));
    os << arr.dump(2) << "\n";
}

std::vector<FigureSeries> read_figures_json(std::istream& is) {
    json arr = json::parse(is);
    std::vector<FigureSeries> out;
    for (const auto& j : arr) out.push_back(series_from_json(j));
    return out;
}

void write_figures_csv(const std::vector<FigureSeries>& series, std::ostream& os) {
    os << "base,kind,x,lo,hi\n";
    for (const auto& s : series) {
        const std::string b = s.base.label();
        for (const auto& p : s.lattice)
            os << b << ",lattice," << p.n << "," << p.value.to_string() << ","
               << p.value.to_string() << "\n";
        for (const auto& c : s.curve)
            os << b << ",curve," << c.x.to_string() << "," << c.y.lo().to_string() << ","
               << c.y.hi().to_string() << "\n";
        os << b << ",tangent,," << s.tangent.slope.lo().to_string() << ","
           << s.tangent.slope.hi().to_string() << "\n";
    }
}

}  // namespace explog
