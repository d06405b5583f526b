#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "explog/cli_ops.hpp"

namespace py = pybind11;
using namespace explog;

namespace {

// Accepts int, str, explog.Rational or anything whose str() parses as an
// exact rational (fractions.Fraction prints "p/q"). Floats are rejected:
// they would smuggle binary rounding into an exact pipeline.
Rational to_rational(const py::object& obj) {
    if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
    if (py::isinstance<py::float_>(obj))
        throw py::type_error("pass exact values (int, str, Fraction), not float");
    return Rational::from_string(py::str(obj).cast<std::string>());
}

Precision to_precision(const py::object& obj) {
    return Precision(to_rational(obj));
}

py::object as_fraction(const Rational& x) {
    const py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(x.to_string());
}

py::dict check_result_dict(const CheckResult& c) {
    py::dict d;
    d["name"] = c.name;
    d["verdict"] = to_string(c.verdict);
    d["trials"] = c.trials;
    d["verified"] = c.verified;
    d["inconclusive"] = c.inconclusive;
    d["falsified"] = c.falsified;
    return d;
}

}  // namespace

PYBIND11_MODULE(_explog, m) {
    m.doc() = "Exact rational enclosures for powers, logarithms, e and exp";

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& v) { return to_rational(v); }))
        .def_property_readonly("numerator",
                               [](const Rational& r) {
                                   return py::int_(py::str(r.numerator().get_str()));
                               })
        .def_property_readonly("denominator",
                               [](const Rational& r) {
                                   return py::int_(py::str(r.denominator().get_str()));
                               })
        .def("as_fraction", &as_fraction)
        .def("__str__", &Rational::to_string)
        .def("__repr__",
             [](const Rational& r) { return "Rational('" + r.to_string() + "')"; })
        .def("__eq__", [](const Rational& a, const py::object& b) {
            return a == to_rational(b);
        })
        .def("__lt__", [](const Rational& a, const py::object& b) {
            return a < to_rational(b);
        })
        .def("__le__", [](const Rational& a, const py::object& b) {
            return a <= to_rational(b);
        });

    py::class_<Interval>(m, "Interval")
        .def(py::init([](const py::object& lo, const py::object& hi) {
                 return Interval(to_rational(lo), to_rational(hi));
             }),
             py::arg("lo"), py::arg("hi"))
        .def_property_readonly("lo", &Interval::lo)
        .def_property_readonly("hi", &Interval::hi)
        .def("width", &Interval::width)
        .def("midpoint", &Interval::midpoint)
        .def("is_point", &Interval::is_point)
        .def("contains",
             [](const Interval& i, const py::object& x) { return i.contains(to_rational(x)); })
        .def("intersects",
             [](const Interval& a, const Interval& b) { return intersect(a, b).has_value(); })
        .def("to_decimal",
             [](const Interval& i, unsigned digits) { return to_decimal(i, digits); },
             py::arg("digits"))
        .def("__repr__", [](const Interval& i) { return "Interval" + i.to_string(); });

    m.def("nth_root",
          [](const py::object& x, unsigned long n, const py::object& eps) {
              return nth_root(to_rational(x), n, to_precision(eps));
          },
          py::arg("x"), py::arg("n"), py::arg("eps") = "1e-6",
          "Enclosure of the n-th root of x >= 0");
    m.def("pow_rat",
          [](const py::object& a, const py::object& q, const py::object& eps) {
              return pow_rat(PosRational(to_rational(a)), to_rational(q), to_precision(eps));
          },
          py::arg("base"), py::arg("exponent"), py::arg("eps") = "1e-6",
          "Enclosure of base^exponent for base > 0 and rational exponent");
    m.def("ln",
          [](const py::object& a, const py::object& eps) {
              return ln_enclosure(PosRational(to_rational(a)), to_precision(eps)).bracket;
          },
          py::arg("a"), py::arg("eps") = "1e-6",
          "Enclosure of ln(a) from two-sided secant slopes");
    m.def("log",
          [](const py::object& base, const py::object& x, const py::object& eps) {
              const Precision p = to_precision(eps);
              const Interval b = py::str(base).cast<std::string>() == "e"
                                     ? compute_e(Precision(p.eps / Rational(8))).bracket
                                     : Interval(to_rational(base));
              return log_enclosure(b, PosRational(to_rational(x)), p);
          },
          py::arg("base"), py::arg("x"), py::arg("eps") = "1e-6",
          "Enclosure of log_base(x); base may be 'e'");
    m.def("ln_integral",
          [](const py::object& x, const py::object& eps) {
              return ln_integral(PosRational(to_rational(x)), to_precision(eps));
          },
          py::arg("x"), py::arg("eps") = "1e-6",
          "Enclosure of the integral of 1/t over [1, x]");
    m.def("e",
          [](const py::object& eps) { return compute_e(to_precision(eps)).bracket; },
          py::arg("eps") = "1e-6", "Enclosure of e located by bisection in [2, 3]");
    m.def("exp_series",
          [](const py::object& x, const py::object& eps) {
              return exp_series(to_rational(x), to_precision(eps));
          },
          py::arg("x"), py::arg("eps") = "1e-6",
          "Enclosure of e^x from exact partial sums with a remainder bound");
    m.def("exp",
          [](const py::object& x, const py::object& eps) {
              return exp_pow(to_rational(x), to_precision(eps));
          },
          py::arg("x"), py::arg("eps") = "1e-6",
          "Enclosure of e^x as a rational power of the e bracket");
    m.def("compound",
          [](const py::object& x, unsigned long n) {
              return compound_value(to_rational(x), n);
          },
          py::arg("x"), py::arg("n"), "Exact (1 + x/n)^n");
    m.def("amgm",
          [](const std::vector<py::object>& values, const py::object& eps) {
              std::vector<Rational> vr;
              vr.reserve(values.size());
              for (const auto& v : values) vr.push_back(to_rational(v));
              const MeanPair mp = amgm(vr, to_precision(eps));
              return py::make_tuple(mp.geometric, mp.arithmetic);
          },
          py::arg("values"), py::arg("eps") = "1e-6",
          "(geometric-mean enclosure, exact arithmetic mean)");
    m.def("diff_quotient",
          [](const py::object& a, const py::object& h, const py::object& eps) {
              return diff_quotient(PosRational(to_rational(a)), to_rational(h),
                                   to_precision(eps))
                  .quotient;
          },
          py::arg("a"), py::arg("h"), py::arg("eps") = "1e-6",
          "Enclosure of the secant slope (a^h - 1)/h");
    m.def("check_quotient_monotone",
          [](const py::object& a, const py::object& h, const py::object& k,
             const py::object& eps) {
              return std::string(to_string(check_quotient_monotone(
                  PosRational(to_rational(a)), to_rational(h), to_rational(k),
                  to_precision(eps))));
          },
          py::arg("a"), py::arg("h"), py::arg("k"), py::arg("eps") = "1e-6",
          "verified | inconclusive | falsified");
    m.def("crosscheck",
          [](const py::object& eps, long trials, std::uint64_t seed) {
              CrosscheckOptions options;
              options.prec = to_precision(eps);
              options.trials = trials;
              options.seed = seed;
              py::list out;
              for (const auto& c : run_crosscheck(options)) out.append(check_result_dict(c));
              return out;
          },
          py::arg("eps") = "1e-6", py::arg("trials") = 100, py::arg("seed") = 1,
          "Run the full cross-validation suite; returns one dict per check");
}
