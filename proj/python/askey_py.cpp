#include "askey/families.hpp"
#include "askey/io.hpp"
#include "askey/oracle.hpp"
#include "askey/properties.hpp"
#include "askey/uniform_limits.hpp"
#include "cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace askey;

namespace {

using Coeffs = RecurrenceCoefficients<double>;

py::dict to_dict(const Coeffs& c) {
  std::vector<double> b, cc;
  for (std::size_t n = 0; n <= c.max_degree(); ++n) {
    b.push_back(c.b(n));
    if (n >= 1) cc.push_back(c.c(n));
  }
  py::dict d;
  d["B"] = b;
  d["C"] = cc;
  return d;
}

Coeffs from_lists(std::vector<double> b, std::vector<double> c) {
  return Coeffs(std::move(b), std::move(c));
}

py::dict row_dict(const io::RowRecord& r) {
  py::dict d;
  d["row"] = r.row;
  d["zero_set"] = r.zero_set;
  d["dimension"] = r.dimension;
  d["target"] = r.target;
  d["candidate"] = r.candidate;
  d["rho"] = r.rho;
  d["sigma"] = r.sigma;
  d["reflected"] = r.reflected;
  d["residual"] = r.residual;
  d["pass"] = r.pass;
  d["error"] = r.error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_askey, m) {
  m.doc() = "Recurrence coefficients of the Askey scheme and its uniform parametrization";

  m.def("coeffs", [](const std::string& family, std::size_t n_max) {
    return to_dict(family_coeffs(cast_family<double>(parse_family(family)), n_max));
  }, py::arg("family"), py::arg("n_max") = 8);

  m.def("jacobi_uniform", [](double inv_alpha, double inv_beta, std::size_t n_max) {
    return to_dict(jacobi_uniform_coeffs(JacobiInverseParams<double>{inv_alpha, inv_beta}, n_max));
  }, py::arg("inv_alpha"), py::arg("inv_beta"), py::arg("n_max") = 8);

  m.def("racah_uniform", [](double a, double b, double d, double v, std::size_t n_max) {
    return to_dict(racah_uniform_coeffs(InverseParams<double>{a, b, d, v}, n_max));
  }, py::arg("inv_alpha"), py::arg("inv_b"), py::arg("inv_d"), py::arg("inv_nu"),
     py::arg("n_max") = 8);

  m.def("identify", [](std::vector<double> b, std::vector<double> c, const std::string& candidate,
                       std::size_t n_max, double tol) {
    const auto fit = identify_rescaled_family(from_lists(std::move(b), std::move(c)),
                                              cast_family<double>(parse_family(candidate)),
                                              n_max, tol);
    py::dict d;
    d["rho"] = fit.map.rho();
    d["sigma"] = fit.map.sigma();
    d["reflected"] = fit.reflected;
    d["residual"] = fit.residual;
    d["matched"] = fit.matched;
    return d;
  }, py::arg("B"), py::arg("C"), py::arg("candidate"), py::arg("n_max"),
     py::arg("tol") = kDefaultIdentificationTolerance);

  m.def("theorem_table", [](std::size_t n_max, double tol, std::optional<std::vector<double>> sample,
                            std::optional<std::string> row) {
    auto point = default_sample_point<double>();
    if (sample) {
      if (sample->size() != 4) throw ParseError("sample needs four values");
      point = {(*sample)[0], (*sample)[1], (*sample)[2], (*sample)[3]};
    }
    std::optional<unsigned> only;
    if (row) only = parse_zero_set(*row);
    py::list out;
    for (const auto& r : io::row_records(theorem_table<double>(n_max, point, tol, only))) {
      out.append(row_dict(r));
    }
    return out;
  }, py::arg("n_max") = 8, py::arg("tol") = kDefaultIdentificationTolerance,
     py::arg("sample") = py::none(), py::arg("row") = py::none());

  m.def("limit_presets", &preset_names);

  m.def("limit_scan", [](const std::string& preset, std::size_t steps, int first,
                         std::size_t n_max) {
    const auto path = limit_preset<double>(preset);
    const auto ts = decade_steps<double>(steps, first);
    py::list out;
    for (const auto& s : io::scan_records(convergence_scan<double>(path, ts, n_max))) {
      py::dict d;
      d["t"] = s.t;
      d["deviation"] = s.deviation;
      d["b_deviation"] = s.b_deviation;
      d["c_deviation"] = s.c_deviation;
      d["order"] = s.order;
      out.append(d);
    }
    return out;
  }, py::arg("preset"), py::arg("steps") = 4, py::arg("first") = 1, py::arg("n_max") = 8);

  m.def("stieltjes", [](std::vector<double> points, std::vector<double> weights,
                        std::size_t n_max) {
    return to_dict(stieltjes(DiscreteMeasure<double>(std::move(points), std::move(weights)), n_max));
  }, py::arg("points"), py::arg("weights"), py::arg("n_max"));

  m.def("properties", [](std::uint64_t seed, std::size_t cases) {
    py::list out;
    for (const auto& r : run_property_suite(seed, cases)) {
      py::dict d;
      d["name"] = r.name;
      d["cases"] = r.cases;
      d["failures"] = r.failures;
      d["worst"] = r.worst;
      d["example"] = r.example;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = 20260101, py::arg("cases") = 100);

  m.def("run_cli", [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));

  py::register_exception<ValidityError>(m, "ValidityError", PyExc_ValueError);
}
