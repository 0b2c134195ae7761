#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "negapoly/closed_forms.hpp"
#include "negapoly/combinatorics.hpp"
#include "negapoly/errors.hpp"
#include "negapoly/harness.hpp"
#include "negapoly/hurwitz.hpp"
#include "negapoly/quadrature.hpp"
#include "negapoly/special.hpp"

namespace py = pybind11;
using namespace negapoly;

namespace {

FamilyId make_id(const std::string& family, int k, const std::string& kernel) {
  return {parse_family(family), k, parse_kernel(kernel)};
}

HurwitzBackend parse_backend(const std::string& name) {
  if (name == "euler_maclaurin") return HurwitzBackend::EulerMaclaurin;
  if (name == "hermite") return HurwitzBackend::HermiteQuadrature;
  throw ArgumentError("unknown backend '" + name + "' (expected euler_maclaurin or hermite)");
}

py::dict quadrature_dict(const QuadratureResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["abs_error_estimate"] = r.abs_error_estimate;
  d["evaluations"] = r.evaluations;
  return d;
}

SuiteConfig config_from(const py::object& overrides) {
  SuiteConfig c;
  if (!overrides.is_none()) {
    c.merge_json(py::module_::import("json").attr("dumps")(overrides).cast<std::string>());
  }
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_negapoly, m) {
  m.doc() = "Hurwitz zeta, negapolygamma and Hermite-type integral closed forms";

  auto base = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<NoClosedFormError>(m, "NoClosedFormError", PyExc_LookupError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);

  m.def("bernoulli_number", [](int k) { return bernoulli_number(k).to_string(); }, py::arg("k"),
        "B_k as a 'p/q' string.");
  m.def("bernoulli_polynomial", &bernoulli_polynomial, py::arg("m"), py::arg("q"));
  m.def("log_gamma", &log_gamma, py::arg("q"));
  m.def("digamma", &digamma, py::arg("q"));
  m.def("polygamma", &polygamma, py::arg("m"), py::arg("q"));
  m.def("riemann_zeta", &riemann_zeta, py::arg("s"));
  m.def("zeta_prime_neg", &zeta_prime_neg, py::arg("n"));

  m.def(
      "hurwitz_zeta",
      [](double z, double q, const std::string& backend) { return hurwitz_zeta(z, q, parse_backend(backend)); },
      py::arg("z"), py::arg("q"), py::arg("backend") = "euler_maclaurin");
  m.def(
      "hurwitz_zeta_prime",
      [](double z, double q, const std::string& backend) {
        return hurwitz_zeta_prime(z, q, parse_backend(backend));
      },
      py::arg("z"), py::arg("q"), py::arg("backend") = "hermite");
  m.def("balanced_A", &balanced_A, py::arg("m"), py::arg("q"));
  m.def("negapolygamma", &negapolygamma, py::arg("m"), py::arg("q"));
  m.def("negapolygamma_at_zero", &negapolygamma_at_zero, py::arg("n"));

  m.def(
      "integrate",
      [](const std::function<double(double)>& f, double growth, const std::string& kernel, double q,
         double rel_tol) { return quadrature_dict(integrate({f, growth}, parse_kernel(kernel), q, rel_tol)); },
      py::arg("f"), py::arg("growth_exponent"), py::arg("kernel"), py::arg("q"), py::arg("rel_tol") = 1e-12);

  m.def("has_closed_form", [](const std::string& family, int k, const std::string& kernel) {
    return has_closed_form(make_id(family, k, kernel));
  }, py::arg("family"), py::arg("k"), py::arg("kernel") = "bose");
  m.def(
      "closed_form",
      [](const std::string& family, int k, double q, const std::string& kernel) {
        const auto v = closed_form(make_id(family, k, kernel), q);
        return py::make_tuple(v.value, v.terms);
      },
      py::arg("family"), py::arg("k"), py::arg("q"), py::arg("kernel") = "bose",
      "(value, [(label, term), ...]) for a family member.");
  m.def(
      "oracle",
      [](const std::string& family, int k, double q, const std::string& kernel, double rel_tol) {
        return quadrature_dict(oracle(make_id(family, k, kernel), q, rel_tol));
      },
      py::arg("family"), py::arg("k"), py::arg("q"), py::arg("kernel") = "bose", py::arg("rel_tol") = 1e-12);

  m.def("special_value_table", [](bool with_oracle) {
    py::list rows;
    for (const auto& r : special_value_table(with_oracle)) {
      py::dict d;
      d["name"] = r.name;
      d["expression"] = r.expression;
      d["q"] = r.q;
      d["closed"] = r.closed;
      d["symbolic"] = r.symbolic;
      d["oracle"] = r.oracle;
      d["oracle_error"] = r.oracle_error;
      rows.append(d);
    }
    return rows;
  }, py::arg("with_oracle") = true);

  m.def(
      "verify_suite",
      [](const py::object& config) {
        const auto report = verify_suite(config_from(config));
        std::ostringstream os;
        write_report(report, os);
        return os.str();
      },
      py::arg("config") = py::none(), "Runs the verification suite and returns the report text.");
}
