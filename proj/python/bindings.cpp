/*
 *            Copyright 2026 The casimir-born Authors
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casimir/commands.hpp"
#include "casimir/green.hpp"
#include "casimir/materials.hpp"
#include "casimir/montecarlo.hpp"
#include "casimir/planar.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/verify.hpp"

namespace py = pybind11;
using namespace casimir;

namespace {

py::dict diag_dict(const DiagKernel3& d) {
  py::dict o;
  o["xx"] = d.xx;
  o["yy"] = d.yy;
  o["zz"] = d.zz;
  return o;
}

py::dict kernel_dict(const KernelPair& m) {
  py::dict o;
  o["electric"] = diag_dict(m.electric);
  o["magnetic"] = diag_dict(m.magnetic);
  return o;
}

Permittivity as_permittivity(const py::object& o) {
  if (py::isinstance<Permittivity>(o)) return o.cast<Permittivity>();
  return Permittivity::constant(o.cast<double>());
}

SlabPair make_pair(double L, const py::object& eps, const py::object& eps_mid) {
  return {L, as_permittivity(eps), as_permittivity(eps_mid)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Born-series Casimir forces and energy densities";

  py::class_<Permittivity>(m, "Permittivity")
      .def_static("constant", &Permittivity::constant, py::arg("eps"))
      .def_static("drude_lorentz", &Permittivity::drude_lorentz, py::arg("wp"), py::arg("w0") = 0.0,
                  py::arg("gamma") = 0.0)
      .def_static("table", &Permittivity::table, py::arg("xi"), py::arg("eps"))
      .def("__call__", &Permittivity::operator(), py::arg("xi"))
      .def_property_readonly("is_dispersive", &Permittivity::is_dispersive)
      .def("to_json", [](const Permittivity& p) { return permittivity_to_json(p).dump(); });

  py::class_<QuadSpec>(m, "QuadSpec")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadSpec::rel_tol)
      .def_readwrite("abs_tol", &QuadSpec::abs_tol)
      .def_readwrite("max_evals", &QuadSpec::max_evals)
      .def_readwrite("scale", &QuadSpec::scale);

  py::class_<QuadResult>(m, "QuadResult")
      .def_readonly("value", &QuadResult::value)
      .def_readonly("err_estimate", &QuadResult::err_estimate)
      .def_readonly("evals", &QuadResult::evals)
      .def_readonly("converged", &QuadResult::converged)
      .def("__float__", [](const QuadResult& r) { return r.value; })
      .def("__repr__", [](const QuadResult& r) {
        return "QuadResult(value=" + format_number(r.value) + ", err=" + format_number(r.err_estimate) +
               ", converged=" + (r.converged ? "True" : "False") + ")";
      });

  py::class_<SlabPair>(m, "SlabPair")
      .def(py::init(&make_pair), py::arg("L"), py::arg("eps"), py::arg("eps_mid") = 1.0)
      .def_readonly("L", &SlabPair::L)
      .def_property_readonly("dispersive", &SlabPair::dispersive);

  m.def("integrate_semi_inf", &integrate_semi_inf, py::arg("f"), py::arg("spec") = QuadSpec{});

  m.def("m1", [](double k, double xi, double eps_mid) { return kernel_dict(m1({k, xi, eps_mid})); },
        py::arg("k_par"), py::arg("xi"), py::arg("eps_mid") = 1.0);
  m.def("m2_lr", [](double k, double xi, double eps_mid) { return kernel_dict(m2_lr({k, xi, eps_mid})); },
        py::arg("k_par"), py::arg("xi"), py::arg("eps_mid") = 1.0);
  m.def("h_prop_realspace", &h_prop_realspace, py::arg("r"), py::arg("r2"), py::arg("xi"),
        py::arg("eps") = 1.0);

  m.def("stress_zz_second_order",
        [](const SlabPair& g, double rel_tol) {
          QuadSpec s = planar_default_spec();
          s.rel_tol = rel_tol;
          return stress_zz_second_order(g, s);
        },
        py::arg("pair"), py::arg("rel_tol") = 1e-7);
  m.def("stress_zz_second_order_closed", &stress_zz_second_order_closed, py::arg("eps"), py::arg("eps_mid"),
        py::arg("L"));
  m.def("stress_parts_second_order",
        [](const SlabPair& g, double z) {
          const StressParts p = stress_parts_second_order(g, z);
          py::dict o;
          o["LL"] = p.LL;
          o["RR"] = p.RR;
          o["LR"] = p.LR;
          o["RL"] = p.RL;
          o["delta"] = p.delta_term;
          return o;
        },
        py::arg("pair"), py::arg("z"));
  m.def("energy_density", [](const SlabPair& g, double z, int order) {
        if (order == 1) return energy_density_first_order(g, z);
        if (order == 2) return energy_density_second_order(g, z);
        throw py::value_error("order must be 1 or 2");
      },
      py::arg("pair"), py::arg("z"), py::arg("order") = 1);
  m.def("density_profile",
        [](const SlabPair& g, std::vector<double> zs, int order, double margin) {
          const DensityProfile p = density_profile(g, std::move(zs), order, margin);
          std::vector<double> z, rho;
          std::vector<std::string> region;
          for (const DensitySample& s : p.samples) {
            z.push_back(s.z);
            rho.push_back(s.rho);
            region.emplace_back(region_name(s.region));
          }
          py::dict o;
          o["z"] = py::array_t<double>(static_cast<py::ssize_t>(z.size()), z.data());
          o["rho"] = py::array_t<double>(static_cast<py::ssize_t>(rho.size()), rho.data());
          o["region"] = region;
          o["excluded"] = p.excluded;
          return o;
        },
        py::arg("pair"), py::arg("z"), py::arg("order") = 1, py::arg("margin") = 1e-3);
  m.def("total_energy_second_order_regularized",
        [](const SlabPair& g, double delta) {
          const RegularizedEnergy e = total_energy_second_order_regularized(g, delta);
          py::dict o;
          o["divergent_coeff"] = e.divergent_coeff;
          o["finite_part"] = e.finite_part;
          o["raw_total"] = e.raw_total;
          o["converged"] = e.converged;
          return o;
        },
        py::arg("pair"), py::arg("delta"));
  m.def("force_from_energy", [](const SlabPair& g, double dL) { return force_from_energy(g, dL); },
        py::arg("pair"), py::arg("dL"));
  m.def("lifshitz_force_exact",
        [](double eps, double eps_mid, double L) { return lifshitz_force_exact(eps, eps_mid, L); },
        py::arg("eps"), py::arg("eps_mid"), py::arg("L"));

  m.def("infinite_plate_density", &infinite_plate_density, py::arg("eps"), py::arg("L"), py::arg("z"));
  m.def("box_density",
        [](double eps, double L, double d, const Eigen::Vector3d& r, std::size_t n, std::uint64_t seed) {
          McSpec spec;
          spec.n_samples = n;
          spec.seed = seed;
          const McResult res = energy_density_first_order_general(r, VolumePair::box_pair(L, d), eps, spec);
          return py::make_tuple(res.value, res.std_error);
        },
        py::arg("eps"), py::arg("L"), py::arg("d"), py::arg("r"), py::arg("n_samples") = 100000,
        py::arg("seed") = 1);

  m.def("verify",
        [](bool quick) {
          VerifyOptions opt;
          opt.quick = quick;
          py::list out;
          for (const CheckResult& c : run_verify(opt)) out.append(py::make_tuple(c.name, c.passed, c.measured));
          return out;
        },
        py::arg("quick") = true);
}
