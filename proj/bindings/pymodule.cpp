// Python bindings for the beattykit core.  Exact Real values travel as
// RealSpec strings (rat:p/q, quad:p,r,D,q, sqrt:D, dec:<digits>, phi) so no
// precision is lost at the language boundary.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "beattykit/beatty.hpp"
#include "beattykit/diophantine.hpp"
#include "beattykit/experiments.hpp"
#include "beattykit/mangoldt.hpp"
#include "beattykit/real.hpp"
#include "beattykit/sums.hpp"
#include "beattykit/trigapprox.hpp"

namespace py = pybind11;
using namespace beattykit;

namespace {

Real parse(const std::string& spec) { return Real::parse(spec); }

beatty::BeattyParams params_of(const std::string& alpha, const std::string& beta) {
    return beatty::BeattyParams::make(Real::parse(alpha), Real::parse(beta));
}

beatty::SumMethod method_of(const std::string& name) {
    if (name == "enumeration") return beatty::SumMethod::Enumeration;
    if (name == "identity") return beatty::SumMethod::Identity;
    throw std::invalid_argument("method must be 'enumeration' or 'identity'");
}

}  // namespace

PYBIND11_MODULE(_beattykit, m) {
    m.doc() = "exact Beatty-sequence arithmetic, von Mangoldt sums and experiments";
    m.attr("__version__") = experiments::kToolkitVersion;
    m.attr("REPORT_SCHEMA_VERSION") = experiments::kReportSchemaVersion;

    // ----------------------------------------------------------------- real
    py::class_<Real>(m, "Real")
        .def_static("parse", &parse, py::arg("spec"))
        .def("to_float", &Real::to_double)
        .def("floor", [](const Real& r) { return r.floor().get_si(); })
        .def("is_rational", &Real::is_rational)
        .def("is_integer", &Real::is_integer)
        .def("__str__", &Real::str)
        .def("__repr__", [](const Real& r) { return "Real(" + r.str() + ")"; });

    // ---------------------------------------------------------------- arith
    py::class_<arith::MangoldtTable>(m, "MangoldtTable")
        .def(py::init<std::uint64_t>(), py::arg("limit"))
        .def_property_readonly("limit", &arith::MangoldtTable::limit)
        .def("spf", &arith::MangoldtTable::spf, py::arg("n"))
        .def("mangoldt", &arith::MangoldtTable::lambda, py::arg("n"));

    m.def("chebyshev_sum", &arith::chebyshev_sum, py::arg("table"), py::arg("x"),
          py::arg("c") = 0, py::arg("d") = 1,
          "sum of Lambda(n) over n <= x, n == c (mod d)");

    // ----------------------------------------------------------- diophantine
    m.def(
        "continued_fraction",
        [](const std::string& x, int k) {
            std::vector<long> out;
            for (const auto& a : dio::continued_fraction(Real::parse(x), k))
                out.push_back(a.get_si());
            return out;
        },
        py::arg("x"), py::arg("k"), "first k partial quotients of the RealSpec x");
    m.def(
        "convergents",
        [](const std::string& x, int k) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& c : dio::convergents(Real::parse(x), k))
                out.emplace_back(c.a.get_str(), c.q.get_str());
            return out;
        },
        py::arg("x"), py::arg("k"), "first k convergents (a, q) as decimal strings");
    m.def(
        "dirichlet_approx",
        [](const std::string& alpha, unsigned long w, unsigned long d, unsigned long K) {
            auto ap = dio::dirichlet_approx_mod(Real::parse(alpha), w, d, mpz_class(K));
            return py::make_tuple(ap.a.get_str(), ap.q.get_str(), ap.err);
        },
        py::arg("alpha"), py::arg("w") = 1, py::arg("d") = 1, py::arg("K"),
        "largest-denominator convergent a/q of alpha*w/d with q <= K; "
        "returns (a, q, |target - a/q|)");
    m.def(
        "estimate_type",
        [](const std::string& alpha, int depth) {
            auto est = dio::estimate_type(Real::parse(alpha), depth);
            return py::make_tuple(est.tau_hat, est.depth, est.exact);
        },
        py::arg("alpha"), py::arg("depth") = 40,
        "irrationality-type estimate (tau_hat, depth_used, exact)");

    // --------------------------------------------------------------- beatty
    m.def(
        "beatty_term",
        [](const std::string& a, const std::string& b, std::uint64_t n) {
            return beatty::beatty_term(params_of(a, b), n);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("n"), "floor(alpha*n + beta), exact");
    m.def(
        "is_member",
        [](const std::string& a, const std::string& b, std::uint64_t mm) {
            return beatty::is_member(params_of(a, b), mm);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("m"),
        "exact membership test for the Beatty sequence");
    m.def(
        "hit_count",
        [](const std::string& a, const std::string& b, std::uint64_t mm) {
            return beatty::hit_count(params_of(a, b), mm);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("m"));
    m.def(
        "beatty_lambda_sum",
        [](const arith::MangoldtTable& t, const std::string& a, const std::string& b,
           std::uint64_t N, std::uint64_t c, std::uint64_t d, const std::string& method) {
            return beatty::beatty_lambda_sum(t, params_of(a, b), N, c, d, method_of(method));
        },
        py::arg("table"), py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("c") = 0,
        py::arg("d") = 1, py::arg("method") = "identity",
        "sum of Lambda(m) over Beatty members m <= N, m == c (mod d)");

    // ------------------------------------------------------------ trigapprox
    m.def("sawtooth", &trig::sawtooth, py::arg("x"));
    m.def("fejer_envelope", &trig::fejer_envelope, py::arg("x"), py::arg("H"));
    py::class_<trig::TrigPoly>(m, "TrigPoly")
        .def_property_readonly("degree", &trig::TrigPoly::degree)
        .def("coeff", &trig::TrigPoly::coeff, py::arg("h"))
        .def("__call__", &trig::TrigPoly::eval, py::arg("x"));
    m.def("vaaler_poly", &trig::vaaler_poly, py::arg("H"),
          "degree-H trigonometric approximation of the sawtooth");
    m.def("vaaler_coeff_constant", &trig::vaaler_coeff_constant, py::arg("poly"));
    py::class_<trig::SmoothedIndicator>(m, "SmoothedIndicator")
        .def(py::init<double, double, int>(), py::arg("gamma"), py::arg("delta"),
             py::arg("J"))
        .def_property_readonly("gamma", &trig::SmoothedIndicator::gamma)
        .def_property_readonly("delta", &trig::SmoothedIndicator::delta)
        .def("__call__", &trig::SmoothedIndicator::value, py::arg("x"))
        .def("coefficient", &trig::SmoothedIndicator::coefficient, py::arg("j"))
        .def_static("default_truncation", &trig::SmoothedIndicator::default_truncation,
                    py::arg("delta"));

    // ----------------------------------------------------------------- sums
    m.def(
        "twisted_sum",
        [](const arith::MangoldtTable& t, std::uint64_t x, const std::string& theta,
           std::uint64_t c, std::uint64_t d) {
            auto s = sums::twisted_sum(t, x, Real::parse(theta).to_dd(), c, d);
            return py::make_tuple(s.value, s.terms);
        },
        py::arg("table"), py::arg("x"), py::arg("theta"), py::arg("c") = 0,
        py::arg("d") = 1, "sum of Lambda(n) e(theta*n), n <= x, n == c (mod d)");
    m.def("lemma23_bound", &sums::lemma23_bound, py::arg("x"), py::arg("q"));
    m.def(
        "discrepancy",
        [](std::vector<double> pts) { return sums::discrepancy_exact(std::move(pts)).value; },
        py::arg("points"), "extreme discrepancy, sorted closed form");
    m.def("discrepancy_bruteforce", &sums::discrepancy_bruteforce, py::arg("points"));
    m.def(
        "beatty_discrepancy",
        [](const std::string& a, const std::string& b, std::uint64_t M) {
            return sums::beatty_discrepancy(Real::parse(a), Real::parse(b), M).value;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("M"),
        "discrepancy of the fractional parts {alpha*m + beta}, m <= M");

    // ------------------------------------------------------------ experiments
    py::class_<experiments::ExperimentReport>(m, "ExperimentReport")
        .def_readonly("id", &experiments::ExperimentReport::id)
        .def_readonly("fitted_exponent", &experiments::ExperimentReport::fitted_exponent)
        .def_readonly("theorem_exponent", &experiments::ExperimentReport::theorem_exponent)
        .def_readonly("has_fit", &experiments::ExperimentReport::has_fit)
        .def("to_json", &experiments::ExperimentReport::to_json,
             py::arg("with_timestamp") = true)
        .def("to_csv", &experiments::ExperimentReport::to_csv)
        .def_property_readonly("rows", [](const experiments::ExperimentReport& r) {
            py::list out;
            for (const auto& row : r.rows) {
                py::dict d;
                d["N"] = row.key;
                d["lhs"] = row.lhs;
                d["main_term"] = row.main_term;
                d["error"] = row.error;
                d["ref_bound"] = row.ref_bound;
                if (row.extra) d["extra"] = *row.extra;
                out.append(d);
            }
            return out;
        });
    m.def(
        "fit_exponent",
        [](const std::vector<std::pair<double, double>>& rows) {
            auto fit = experiments::fit_exponent(rows);
            return py::make_tuple(fit.slope, fit.intercept, fit.residual_norm, fit.dropped);
        },
        py::arg("rows"), "OLS slope of log E against log N");
    m.def(
        "verify_th1",
        [](const arith::MangoldtTable& t, const std::string& a, const std::string& b,
           std::uint64_t c, std::uint64_t d, const std::vector<std::uint64_t>& grid,
           double eps) { return experiments::verify_th1(t, params_of(a, b), c, d, grid, eps); },
        py::arg("table"), py::arg("alpha"), py::arg("beta"), py::arg("c"), py::arg("d"),
        py::arg("grid"), py::arg("epsilon") = 0.05);
    m.def(
        "verify_th2",
        [](const arith::MangoldtTable& t, const std::string& a, const std::string& b,
           std::uint64_t c, std::uint64_t d, const std::vector<std::uint64_t>& grid,
           double eps) { return experiments::verify_th2(t, params_of(a, b), c, d, grid, eps); },
        py::arg("table"), py::arg("alpha"), py::arg("beta"), py::arg("c"), py::arg("d"),
        py::arg("grid"), py::arg("epsilon") = 0.05);
    m.def(
        "decomposition_check",
        [](const arith::MangoldtTable& t, const std::string& a, const std::string& b,
           std::uint64_t c, std::uint64_t d, std::uint64_t N) {
            return experiments::decomposition_check(t, params_of(a, b), c, d, N);
        },
        py::arg("table"), py::arg("alpha"), py::arg("beta"), py::arg("c"), py::arg("d"),
        py::arg("N"), "absolute defect of the floor/sawtooth decomposition");
    m.def(
        "decay_scan",
        [](const std::string& a, const std::string& b,
           const std::vector<std::uint64_t>& grid) {
            return experiments::discrepancy_decay_scan(Real::parse(a), Real::parse(b), grid);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("grid"));
}
