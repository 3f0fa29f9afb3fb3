// Python bindings for the core operations: eta and its reflection factor,
// the weighted embedding, shift-coefficient tables, zeros and the audit
// suite.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etaembed/audit.hpp"
#include "etaembed/bernoulli.hpp"
#include "etaembed/coefficients.hpp"
#include "etaembed/embedding.hpp"
#include "etaembed/errors.hpp"
#include "etaembed/eta.hpp"
#include "etaembed/zeros.hpp"

namespace py = pybind11;
using namespace etaembed;

namespace {

EvalConfig make_config(int kmax, double tol) {
    return EvalConfig{kmax, tol, AccumMode::compensated};
}

py::dict zero_dict(const ZeroRecord& z) {
    py::dict d;
    d["sigma"] = z.sigma;
    d["t"] = z.t;
    d["residual"] = z.residual;
    d["method"] = (z.method == RefineMethod::newton) ? "newton" : "bisect";
    d["iterations"] = z.iterations;
    return d;
}

}  // namespace

PYBIND11_MODULE(_etaembed, m) {
    m.doc() = "Dirichlet eta, weighted embedding, shift coefficients, zeros "
              "and claim audits";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const accuracy_error& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const consistency_error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def(
        "eta",
        [](std::complex<double> s, int kmax, double tol) {
            return eta(s, make_config(kmax, tol)).value;
        },
        py::arg("s"), py::arg("kmax") = 96, py::arg("tol") = 1e-14);

    m.def(
        "eta_info",
        [](std::complex<double> s, int kmax, double tol) {
            EtaValue v = eta(s, make_config(kmax, tol));
            py::dict d;
            d["value"] = v.value;
            d["est_error"] = v.est_error;
            d["terms"] = v.terms_used;
            return d;
        },
        py::arg("s"), py::arg("kmax") = 96, py::arg("tol") = 1e-14);

    m.def(
        "eta_derivative",
        [](std::complex<double> s, int kmax, double tol) {
            return eta_derivative(s, make_config(kmax, tol)).value;
        },
        py::arg("s"), py::arg("kmax") = 96, py::arg("tol") = 1e-14);

    m.def("eta_oracle", &eta_oracle, py::arg("s"), py::arg("nterms") = 96);
    m.def("lambda_factor", &lambda_factor, py::arg("s"));
    m.def(
        "functional_residual",
        [](std::complex<double> s, int kmax, double tol) {
            return functional_residual(s, make_config(kmax, tol));
        },
        py::arg("s"), py::arg("kmax") = 96, py::arg("tol") = 1e-14);

    m.def("b_kernel", &b_kernel, py::arg("x"), py::arg("kappa"));
    m.def("b_ratio", &b_ratio, py::arg("x"), py::arg("kappa"));
    m.def(
        "eta_embedding",
        [](std::complex<double> s, double kappa, double nu, int kmax, double tol) {
            return eta_embedding(s, EmbeddingParams(kappa, nu), make_config(kmax, tol))
                .value;
        },
        py::arg("s"), py::arg("kappa"), py::arg("nu") = 1.0, py::arg("kmax") = 96,
        py::arg("tol") = 1e-14);

    py::class_<CoeffTable>(m, "CoeffTable")
        .def_readonly("kappa", &CoeffTable::kappa)
        .def_readonly("a", &CoeffTable::a)
        .def_readonly("b", &CoeffTable::b)
        .def_readonly("N", &CoeffTable::N)
        .def_readonly("jcap", &CoeffTable::jcap)
        .def_readonly("tail_bound", &CoeffTable::tail_bound)
        .def("to_json", &coeff_table_to_json);

    m.def(
        "coeff_table",
        [](double kappa, int N, double tol) { return b_coeffs(a_coeffs(kappa, N, tol)); },
        py::arg("kappa"), py::arg("N") = 32, py::arg("tol") = 1e-15);
    m.def("convolution_residual", &convolution_residual, py::arg("table"));
    m.def(
        "expansion_eval",
        [](std::complex<double> s, const CoeffTable& table, double nu, int kmax,
           double tol) { return expansion_eval(s, table, nu, make_config(kmax, tol)); },
        py::arg("s"), py::arg("table"), py::arg("nu") = 1.0, py::arg("kmax") = 96,
        py::arg("tol") = 1e-14);
    m.def(
        "inversion_eval",
        [](std::complex<double> s, const CoeffTable& table, double nu, int kmax,
           double tol) { return inversion_eval(s, table, nu, make_config(kmax, tol)); },
        py::arg("s"), py::arg("table"), py::arg("nu") = 1.0, py::arg("kmax") = 96,
        py::arg("tol") = 1e-14);
    m.def(
        "coeff_sums",
        [](double kappa, int N) {
            CoeffSumIdentities ids = coeff_sum_identities(kappa, N);
            py::dict d;
            d["a_sum_lhs"] = ids.a_sum_lhs;
            d["a_sum_rhs"] = ids.a_sum_rhs;
            d["a_residual"] = ids.a_residual;
            d["b_sum_lhs"] = ids.b_sum_lhs;
            d["b_sum_rhs"] = ids.b_sum_rhs;
            d["b_residual"] = ids.b_residual;
            return d;
        },
        py::arg("kappa"), py::arg("N") = 25);

    m.def(
        "scan_critical_line",
        [](double tmin, double tmax, double step, int kmax, double tol) {
            return scan_critical_line(tmin, tmax, step, make_config(kmax, tol));
        },
        py::arg("tmin"), py::arg("tmax"), py::arg("step") = 0.05,
        py::arg("kmax") = 256, py::arg("tol") = 4e-10);
    m.def(
        "refine_zero",
        [](double t0, int kmax, double tol) {
            return zero_dict(refine_zero(t0, make_config(kmax, tol)));
        },
        py::arg("t0"), py::arg("kmax") = 256, py::arg("tol") = 1e-12);
    m.def(
        "refine_zero_bisect",
        [](double t0, int kmax, double tol) {
            return zero_dict(refine_zero_bisect(t0, make_config(kmax, tol)));
        },
        py::arg("t0"), py::arg("kmax") = 256, py::arg("tol") = 1e-12);
    m.def(
        "winding_rect",
        [](double smin, double smax, double tmin, double tmax, int kmax, double tol) {
            return winding_rect(Rect{smin, smax, tmin, tmax}, make_config(kmax, tol));
        },
        py::arg("sigma_min"), py::arg("sigma_max"), py::arg("t_min"), py::arg("t_max"),
        py::arg("kmax") = 256, py::arg("tol") = 4e-10);
    m.def(
        "count_zeros_rect",
        [](double smin, double smax, double tmin, double tmax, int kmax, double tol) {
            return count_zeros_rect(Rect{smin, smax, tmin, tmax},
                                    make_config(kmax, tol));
        },
        py::arg("sigma_min"), py::arg("sigma_max"), py::arg("t_min"), py::arg("t_max"),
        py::arg("kmax") = 256, py::arg("tol") = 4e-10);

    m.def(
        "bernoulli",
        [](int j) { return bernoulli_table_200().value(j); },
        py::arg("j"), "B_{2j} as a float");
    m.def(
        "bernoulli_rational",
        [](int j) { return bernoulli_table_200().rational(j); },
        py::arg("j"), "Exact B_{2j} as p/q (2j <= 60)");

    m.def(
        "run_default_audit",
        [](int threads) { return audit_to_json(run_suite(AuditConfig{}, threads)); },
        py::arg("threads") = 1,
        "Full audit suite on the default grids; returns the JSON report");
}
