#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hurzeta/evaluate.hpp"
#include "hurzeta/genfun.hpp"
#include "hurzeta/hurwitz.hpp"
#include "hurzeta/special_functions.hpp"
#include "hurzeta/validation.hpp"

namespace py = pybind11;
using namespace hurzeta;

namespace {

QuadratureSpec make_spec(double rel_tol, double abs_tol) {
  QuadratureSpec s;
  s.rel_tol = rel_tol;
  s.abs_tol = abs_tol;
  return s;
}

py::dict breakdown_dict(const EvalBreakdown& e) {
  py::dict d;
  d["term_half_bk"] = e.term_half_bk;
  d["term_polylog_single"] = e.term_polylog_single;
  d["term_polylog_sum"] = e.term_polylog_sum;
  d["term_integral"] = e.term_integral;
  d["total"] = e.total;
  d["integral_error"] = e.integral_error;
  d["extended_precision"] = e.extended_precision;
  d["warnings"] = e.warnings;
  return d;
}

py::dict report_dict(const ConvergenceReport& r) {
  py::dict d;
  d["parameter"] = r.parameter;
  d["n"] = r.n_values;
  d["observed"] = r.observed;
  d["target"] = r.target;
  d["deviation"] = r.deviation;
  d["fitted_rate"] = r.fitted_rate;
  d["verdict"] = std::string(to_string(r.verdict));
  d["ok"] = r.ok();
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hurzeta, m) {
  m.doc() = "Hurwitz zeta at integer order via a polylog/cot-integral formula";

  static py::exception<Error> error(m, "HurzetaError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "zeta",
      [](int k, Complex b, double rel_target, double abs_target) {
        RouteOptions opts;
        opts.rel_target = rel_target;
        opts.abs_target = abs_target;
        const ZetaValue z = zeta(k, b, opts);
        py::dict d;
        d["value"] = z.value;
        d["error_estimate"] = z.error_estimate;
        d["route"] = std::string(to_string(z.route));
        d["conjugated"] = z.conjugated;
        d["notices"] = z.notices;
        return d;
      },
      py::arg("k"), py::arg("b"), py::arg("rel_target") = 1e-13, py::arg("abs_target") = 0.0);

  m.def(
      "hurwitz_zeta",
      [](int k, Complex b, double rel_tol, double abs_tol) {
        return breakdown_dict(hurwitz_zeta(ZetaParams(k, b), make_spec(rel_tol, abs_tol)));
      },
      py::arg("k"), py::arg("b"), py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-13);

  m.def("series_oracle", &hurwitz_series_reference, py::arg("k"), py::arg("b"), py::arg("tol") = 1e-12);
  m.def("bracket_kernel",
        [](int k, Complex b, double u) { return bracket_kernel(ZetaParams(k, b), u); },
        py::arg("k"), py::arg("b"), py::arg("u"));
  m.def("hp_partial_sum", &hp_partial_sum, py::arg("k"), py::arg("b"), py::arg("n"));

  m.def(
      "bernoulli",
      [](int n) {
        const Rational r = bernoulli(n);
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(py::int_(py::str(numerator(r).str())), py::int_(py::str(denominator(r).str())));
      },
      py::arg("n"));
  m.def("polylog_nonpos", [](int m_, Complex z) { return polylog_nonpos(m_, z).value; },
        py::arg("m"), py::arg("z"));
  m.def("harmonic_number", &harmonic_number, py::arg("k"), py::arg("n"));

  m.def(
      "genfun_closed",
      [](Complex x, Complex b) {
        const GenFunEval e = genfun_closed(x, b);
        py::dict d;
        d["case"] = std::string(to_string(e.gcase.tag));
        d["rational_term"] = e.rational_term;
        d["trig_term"] = e.trig_term;
        d["integral_term"] = e.integral_term;
        d["total"] = e.total;
        d["warnings"] = e.warnings;
        return d;
      },
      py::arg("x"), py::arg("b"));
  m.def(
      "genfun_series",
      [](Complex x, Complex b, int kmax) {
        const SeriesSum s = genfun_series(x, b, kmax);
        return py::make_tuple(s.value, s.tail_bound);
      },
      py::arg("x"), py::arg("b"), py::arg("kmax") = 120);
  m.def("genfun_radius", &genfun_radius, py::arg("b"));
  m.def("odd_zeta_integral", [](int j) { return odd_zeta_integral(j); }, py::arg("j"));
  m.def("sinh_kernel", &sinh_kernel, py::arg("c"), py::arg("u"));
  m.def("sinh_kernel_series", &sinh_kernel_series, py::arg("c"), py::arg("u"), py::arg("terms"));
  m.def(
      "zeta_from_genfun",
      [](int k, Complex b, double radius, int nodes) {
        return zeta_from_genfun(k, b, radius, nodes).value;
      },
      py::arg("k"), py::arg("b"), py::arg("radius"), py::arg("nodes") = 32);

  m.def("theorem1_scan",
        [](int k, const std::vector<long>& n) { return report_dict(theorem1_scan(k, n)); },
        py::arg("k"), py::arg("n_values"));
  m.def("zero_integral_scan",
        [](const std::vector<long>& n, double tol) { return report_dict(zero_integral_scan(n, tol)); },
        py::arg("n_values"), py::arg("tol") = 1e-8);
}
