// Copyright 2026 The qunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cstdint>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qunc/bounds.hpp"
#include "qunc/errors.hpp"
#include "qunc/products.hpp"
#include "qunc/qubit.hpp"

namespace py = pybind11;
using namespace qunc;

namespace {

py::dict to_dict(const BoundReport& r) {
  py::dict d;
  d["s"] = r.s;
  d["variance"] = r.variance;
  d["classical_variance"] = r.classical_variance;
  d["comm_norm_sq"] = r.comm_norm_sq;
  d["coefficient"] = r.coefficient ? py::cast(*r.coefficient) : py::none();
  d["luo_bound"] = r.luo_bound;
  d["luo_valid"] = r.luo_valid;
  d["optimal_bound"] = r.optimal_bound;
  d["sharp_bound"] = r.sharp_bound;
  d["slack"] = r.slack;
  return d;
}

py::dict to_dict(const AveragedBounds& b) {
  py::dict d;
  d["purity"] = b.purity;
  d["avg_robertson"] = b.avg_robertson;
  d["avg_schrodinger"] = b.avg_schrodinger;
  d["avg_luo"] = b.avg_luo;
  d["avg_optimal"] = b.avg_optimal;
  d["avg_sharp"] = b.avg_sharp;
  d["avg_variance_product"] = b.avg_variance_product;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Variance lower bounds for finite-dimensional quantum states";

  py::register_exception<Error>(m, "QuncError", PyExc_ValueError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const ComplexMatrix& rho) { return make_density(rho); }), py::arg("rho"))
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("lambda_min", &DensityMatrix::lambda_min)
      .def_property_readonly("lambda_max", &DensityMatrix::lambda_max);

  py::class_<Observable>(m, "Observable")
      .def(py::init([](const ComplexMatrix& a) { return make_observable(a); }), py::arg("a"))
      .def_property_readonly("matrix", &Observable::matrix);

  m.def("bloch_state", [](double r, std::array<double, 3> n) { return from_bloch(make_bloch(r, n)); },
        py::arg("r"), py::arg("n"));
  m.def("random_density", py::overload_cast<int, int, std::uint64_t>(&random_density),
        py::arg("dim"), py::arg("rank"), py::arg("seed"));
  m.def("random_observable", py::overload_cast<int, std::uint64_t>(&random_observable),
        py::arg("dim"), py::arg("seed"));

  m.def("variance", &variance, py::arg("rho"), py::arg("a"));
  m.def("classical_variance", &classical_variance, py::arg("rho"), py::arg("a"));
  m.def("comm_norm_sq", &comm_norm_sq, py::arg("rho"), py::arg("a"), py::arg("s"));
  m.def("optimal_coefficient", &optimal_coefficient, py::arg("rho"), py::arg("s"));
  m.def("pinch", &pinch, py::arg("rho"), py::arg("a"));
  m.def("tight_witness", &tight_witness, py::arg("rho"));
  m.def("lemma_ratio", &lemma_ratio, py::arg("x"), py::arg("y"), py::arg("s"));
  m.def(
      "bound_report",
      [](const DensityMatrix& rho, const Observable& a, double s) {
        return to_dict(single_bound_report(rho, a, s));
      },
      py::arg("rho"), py::arg("a"), py::arg("s"));
  m.def(
      "product_report",
      [](const DensityMatrix& rho, const Observable& a, const Observable& b, double s) {
        const ProductReport r = product_report(rho, a, b, s);
        py::dict d;
        d["s"] = r.s;
        d["variance_product"] = r.variance_product;
        d["robertson"] = r.robertson;
        d["schrodinger"] = r.schrodinger;
        d["luo_product"] = r.luo_product;
        d["optimal_product"] = r.optimal_product;
        d["sharp_product"] = r.sharp_product;
        return d;
      },
      py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("s"));

  m.def(
      "averaged_bounds", [](double purity) { return to_dict(averaged_bounds_analytic(purity)); },
      py::arg("purity"));
  m.def(
      "averaged_bounds_monte_carlo",
      [](double purity, std::uint64_t samples, std::uint64_t seed, double s, unsigned workers) {
        MonteCarloBounds mc;
        {
          py::gil_scoped_release release;
          mc = averaged_bounds_monte_carlo(purity, samples, seed, s, workers);
        }
        py::dict d;
        d["mean"] = to_dict(mc.mean);
        d["standard_error"] = to_dict(mc.standard_error);
        d["samples"] = mc.samples;
        d["agrees"] = mc.agrees_with(averaged_bounds_analytic(purity));
        return d;
      },
      py::arg("purity"), py::arg("samples"), py::arg("seed"), py::arg("s") = 1.0,
      py::arg("workers") = 1);
}
