#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtwist/charsum.hpp"
#include "qtwist/gauss.hpp"
#include "qtwist/lfunctions.hpp"
#include "qtwist/mainterm.hpp"
#include "qtwist/modform.hpp"
#include "qtwist/poisson.hpp"
#include "qtwist/report.hpp"

namespace py = pybind11;
using namespace qtwist;

namespace {

SumMethod method_from_string(const std::string& s) {
    if (s == "naive") return SumMethod::naive;
    if (s == "sieved") return SumMethod::sieved;
    throw std::invalid_argument("method must be 'naive' or 'sieved'");
}

}  // namespace

PYBIND11_MODULE(_qtwist, m) {
    m.doc() = "mean squares of quadratic twists of modular-form coefficients";

    py::register_exception<AccuracyError>(m, "AccuracyError");

    py::class_<FactorTables>(m, "FactorTables")
        .def_readonly("limit", &FactorTables::limit)
        .def("spf", [](const FactorTables& t, std::uint64_t n) { return t.spf.at(n); })
        .def("mobius", [](const FactorTables& t, std::uint64_t n) { return t.mobius.at(n); })
        .def("phi", [](const FactorTables& t, std::uint64_t n) { return t.phi.at(n); })
        .def("divcount", [](const FactorTables& t, std::uint64_t n) { return t.divcount.at(n); })
        .def("is_odd_squarefree", &FactorTables::is_odd_squarefree);
    m.def("build_factor_tables", &build_factor_tables, py::arg("limit"));

    m.def("kronecker", &kronecker, py::arg("a"), py::arg("n"));

    py::class_<EigenformCoefficients>(m, "EigenformCoefficients")
        .def_readonly("weight", &EigenformCoefficients::weight)
        .def_readonly("limit", &EigenformCoefficients::limit)
        .def("tau",
             [](const EigenformCoefficients& c, std::uint64_t n) {
                 return py::int_(py::str(int128_to_string(c.tau.at(n))));
             })
        .def("lam", [](const EigenformCoefficients& c, std::uint64_t n) { return c.lambda.at(n); });
    m.def("lambda_table", &lambda_table, py::arg("limit"));
    m.def("lambda_at_squares", &lambda_at_squares, py::arg("coeffs"), py::arg("m"));

    m.def(
        "gauss_direct", [](long long k, std::uint64_t m) { return gauss_direct(k, m); },
        py::arg("k"), py::arg("m"));
    m.def(
        "gauss_closed",
        [](long long k, std::uint64_t m, const FactorTables& t) { return gauss_closed(k, m, t); },
        py::arg("k"), py::arg("m"), py::arg("tables"));

    py::class_<SmoothWindow>(m, "SmoothWindow")
        .def_static(
            "bump", [](double a, double b) { return SmoothWindow::bump(a, b); }, py::arg("a"),
            py::arg("b"))
        .def_readonly("a", &SmoothWindow::a)
        .def_readonly("b", &SmoothWindow::b)
        .def_readonly("mass", &SmoothWindow::mass)
        .def("__call__", &SmoothWindow::operator());
    m.def(
        "tilde_transform", [](const SmoothWindow& w, double xi) { return tilde_transform(w, xi); },
        py::arg("window"), py::arg("xi"));
    m.def(
        "mellin_transform",
        [](const SmoothWindow& w, std::complex<double> s) { return mellin_transform(w, s); },
        py::arg("window"), py::arg("s"));

    m.def("zeta", &zeta_eval, py::arg("s"));

    py::class_<LSeriesAccessor>(m, "LSeries")
        .def(py::init<const EigenformCoefficients&, std::size_t>(), py::arg("coeffs"),
             py::arg("nterms") = 20000, py::keep_alive<1, 2>())
        .def("coefficient", &LSeriesAccessor::coefficient)
        .def("completed", &LSeriesAccessor::completed)
        .def("L", &LSeriesAccessor::L)
        .def("L1", &LSeriesAccessor::L1);

    m.def(
        "inner_sum",
        [](std::uint64_t d, double Y, const SmoothWindow& phi, const EigenformCoefficients& c,
           const FactorTables& t) { return inner_sum(d, Y, phi, c, t); },
        py::arg("d"), py::arg("y"), py::arg("phi"), py::arg("coeffs"), py::arg("tables"));

    m.def(
        "mean_square",
        [](double X, double Y, const SmoothWindow& phi, const SmoothWindow& psi,
           const EigenformCoefficients& c, const FactorTables& t, const std::string& method,
           int workers) {
            const ExperimentPoint pt =
                mean_square(X, Y, phi, psi, c, t, method_from_string(method), workers);
            py::dict out;
            out["X"] = pt.X;
            out["Y"] = pt.Y;
            out["value_S"] = pt.value_S;
            out["n_d_terms"] = pt.n_d_terms;
            out["wall_time"] = pt.wall_time;
            out["method"] = method;
            return out;
        },
        py::arg("x"), py::arg("y"), py::arg("phi"), py::arg("psi"), py::arg("coeffs"),
        py::arg("tables"), py::arg("method") = "sieved", py::arg("workers") = 1);

    m.def(
        "diagonal_constant",
        [](double Y, const SmoothWindow& phi, const SmoothWindow& psi,
           const EigenformCoefficients& c, const FactorTables& t) {
            return diagonal_constant(Y, phi, psi, c, t);
        },
        py::arg("y"), py::arg("phi"), py::arg("psi"), py::arg("coeffs"), py::arg("tables"));
    m.def("extrapolate_diagonal", &extrapolate_diagonal);

    m.def(
        "c0_contour",
        [](const SmoothWindow& phi, const SmoothWindow& psi, const LSeriesAccessor& acc,
           const EigenformCoefficients& c, const FactorTables& t, double epsilon) {
            ContourSpec spec;
            spec.epsilon = epsilon;
            const C0Result r = c0_contour(phi, psi, spec, acc, c, t);
            return py::make_tuple(r.value, r.error_estimate, r.T_used);
        },
        py::arg("phi"), py::arg("psi"), py::arg("lseries"), py::arg("coeffs"), py::arg("tables"),
        py::arg("epsilon") = 0.08);

    m.def(
        "poisson_check",
        [](std::uint64_t n, double X, const SmoothWindow& F, const FactorTables& t) {
            const PoissonCheck c = poisson_check(n, X, F, t);
            py::dict out;
            out["lhs"] = c.lhs;
            out["rhs"] = c.rhs;
            out["residual"] = c.residual;
            out["k_max_used"] = c.k_max_used;
            return out;
        },
        py::arg("n"), py::arg("x"), py::arg("window"), py::arg("tables"));
}
