#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>
#include <algorithm>
#include <string>

#include "isosqueeze/algebra.hpp"
#include "isosqueeze/dist.hpp"
#include "isosqueeze/errors.hpp"
#include "isosqueeze/specfun.hpp"
#include "isosqueeze/squeezing.hpp"
#include "isosqueeze/states.hpp"
#include "isosqueeze/stats.hpp"

namespace py = pybind11;
using isosq::cplx;
using isosq::FockVector;

namespace {

isosq::states::Kind parse_kind(const std::string& k) {
  if (k == "i" || k == "nonlinear") return isosq::states::Kind::nonlinear;
  if (k == "iii" || k == "squeezed") return isosq::states::Kind::squeezed;
  throw py::value_error("kind must be 'i' or 'iii'");
}

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::array_t<cplx> amps_array(const FockVector& v) {
  const auto a = v.amps();
  py::array_t<cplx> out(static_cast<py::ssize_t>(a.size()));
  std::copy(a.begin(), a.end(), out.mutable_data());
  return out;
}

py::array_t<double> grid_array(const isosq::dist::DistGrid& g) {
  py::array_t<double> out({g.axis1.size(), g.axis2.size()});
  std::copy(g.values.begin(), g.values.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Squeezed states of the generalized isotonic oscillator";

  py::register_exception<isosq::ZeroVector>(m, "ZeroVector", PyExc_ValueError);
  py::register_exception<isosq::RadiusViolation>(m, "RadiusViolation", PyExc_ValueError);
  py::register_exception<isosq::UndefinedMoment>(m, "UndefinedMoment", PyExc_ArithmeticError);
  py::register_exception<isosq::UndefinedA3>(m, "UndefinedA3", PyExc_ArithmeticError);
  py::register_exception<isosq::SParameterOutOfRange>(m, "SParameterOutOfRange", PyExc_ValueError);

  m.def("log_factorial", &isosq::specfun::log_factorial, py::arg("n"));
  m.def("hermite", &isosq::specfun::hermite, py::arg("n"), py::arg("x"));
  m.def("assoc_laguerre", &isosq::specfun::assoc_laguerre, py::arg("n"), py::arg("k"), py::arg("x"));

  py::class_<FockVector>(m, "FockVector")
      .def(py::init([](py::array_t<cplx, py::array::c_style | py::array::forcecast> a, double tail) {
             return FockVector(std::vector<cplx>(a.data(), a.data() + a.size()), tail);
           }),
           py::arg("amps"), py::arg("tail_bound") = 0.0)
      .def_static("basis", &FockVector::basis, py::arg("level"), py::arg("dim"))
      .def_property_readonly("base_index", &FockVector::base_index)
      .def_property_readonly("amps", &amps_array)
      .def_property_readonly("tail_bound", &FockVector::tail_bound)
      .def_property_readonly("top_level", &FockVector::top_level)
      .def("amp", &FockVector::amp, py::arg("level"))
      .def("norm", &FockVector::norm)
      .def("__len__", &FockVector::size)
      .def("to_json", [](const FockVector& v) { return to_python(isosq::to_json(v)); });

  m.def("normalize", &isosq::normalize, py::arg("v"));
  m.def("inner_product", &isosq::inner_product, py::arg("u"), py::arg("v"));

  m.def(
      "build_state",
      [](const std::string& kind, double r, double theta, int n_max) {
        return isosq::states::build_state({parse_kind(kind), r, theta, n_max});
      },
      py::arg("kind"), py::arg("r"), py::arg("theta") = 0.0, py::arg("n_max") = isosq::states::kDefaultNMax,
      "Case 'i' nonlinear squeezed state (r = |beta|) or case 'iii' squeezed state (r = |xi| < 1).");
  m.def(
      "tail_mass",
      [](const std::string& kind, double r, double theta, int n_max) {
        return isosq::states::tail_mass({parse_kind(kind), r, theta, n_max});
      },
      py::arg("kind"), py::arg("r"), py::arg("theta") = 0.0, py::arg("n_max") = isosq::states::kDefaultNMax);
  m.def(
      "dual_series_diagnosis",
      [](int n_terms) { return to_python(isosq::states::to_json(isosq::states::dual_series_diagnosis(n_terms))); },
      py::arg("n_terms") = 50);

  m.def(
      "verify_commutators",
      [](int n_low, int n_high) { return to_python(isosq::algebra::to_json(isosq::algebra::verify_commutators(n_low, n_high))); },
      py::arg("n_low") = 3, py::arg("n_high") = 60);
  m.def("casimir_eigenvalue", &isosq::algebra::casimir_eigenvalue, py::arg("n"));
  m.def("deformed_energy", &isosq::algebra::deformed_energy, py::arg("n"));

  m.def(
      "photon_distribution",
      [](const FockVector& v) {
        py::array_t<double> out({static_cast<py::ssize_t>(v.size()), py::ssize_t{2}});
        auto o = out.mutable_unchecked<2>();
        const auto dist = isosq::stats::photon_distribution(v);
        for (std::size_t i = 0; i < dist.size(); ++i) {
          o(i, 0) = dist[i].level;
          o(i, 1) = dist[i].probability;
        }
        return out;
      },
      py::arg("v"), "Rows of (level, probability).");
  m.def(
      "k0_moments",
      [](const FockVector& v) {
        const auto k = isosq::stats::k0_moments(v);
        return py::make_tuple(k.mean, k.mean_sq);
      },
      py::arg("v"));
  m.def("mandel_q", &isosq::stats::mandel_Q, py::arg("v"));
  m.def("g2_zero", &isosq::stats::g2_zero, py::arg("v"));
  m.def("factorial_moment", &isosq::stats::factorial_moment, py::arg("v"), py::arg("j"));
  m.def("a3_parameter", &isosq::stats::a3_parameter, py::arg("v"));

  m.def(
      "quadrature_identities",
      [](const FockVector& v) {
        const auto q = isosq::squeezing::quadrature_identities(v);
        return py::make_tuple(q.I1, q.I2);
      },
      py::arg("v"), "(I1, I2); negative values mark quadrature squeezing.");
  m.def(
      "amplitude_squared_identities",
      [](const FockVector& v) {
        const auto a = isosq::squeezing::amplitude_squared_identities(v);
        return py::make_tuple(a.I3, a.I4);
      },
      py::arg("v"));

  m.def("quadrature_probability", &isosq::dist::quadrature_probability, py::arg("v"), py::arg("x"), py::arg("phi"));
  m.def(
      "quadrature_grid",
      [](const FockVector& v, const std::vector<double>& xs, const std::vector<double>& phis) {
        return grid_array(isosq::dist::quadrature_grid(v, xs, phis));
      },
      py::arg("v"), py::arg("xs"), py::arg("phis"), "P[i, j] = P(xs[i], phis[j]).");
  m.def("displacement_element", &isosq::dist::displacement_element, py::arg("m"), py::arg("n"), py::arg("lam"));
  m.def("characteristic_function", &isosq::dist::characteristic_function, py::arg("v"), py::arg("lam"), py::arg("s"));
  m.def("quasi_probability", &isosq::dist::quasi_probability, py::arg("v"), py::arg("z"), py::arg("s"));
  m.def(
      "quasi_probability_grid",
      [](const FockVector& v, const std::vector<double>& xs, const std::vector<double>& ps, double s) {
        return grid_array(isosq::dist::quasi_probability_grid(v, xs, ps, s));
      },
      py::arg("v"), py::arg("xs"), py::arg("ps"), py::arg("s"), "F[i, j] = F(xs[i] + 1j * ps[j], s).");
}
