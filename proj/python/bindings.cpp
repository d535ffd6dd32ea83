#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "floqsim/concurrence.hpp"
#include "floqsim/errors.hpp"
#include "floqsim/pipeline.hpp"
#include "floqsim/report.hpp"

namespace py = pybind11;
using namespace floqsim;

namespace {

using PyMatrix = std::vector<std::vector<cd>>;

PyMatrix to_py(const ComplexMatrix& m) {
  PyMatrix out(m.dim(), std::vector<cd>(m.dim()));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out[r][c] = m(r, c);
  return out;
}

ComplexMatrix from_py(const PyMatrix& m) {
  const int n = static_cast<int>(m.size());
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(m[r].size()) != n)
      throw Error("matrix must be square");
    for (int c = 0; c < n; ++c) out(r, c) = m[r][c];
  }
  return out;
}

std::array<std::array<double, 4>, 4> rates_to_py(const RateTable& t) {
  return t.rates;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "steady-state entanglement in strongly driven coupled qubits";

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double eps0, double delta1, double delta2, double j,
                       double omega) {
             return ModelParams{eps0, delta1, delta2, j, omega};
           }),
           py::arg("eps0") = 3.7, py::arg("delta1") = 0.1,
           py::arg("delta2") = 0.15, py::arg("j") = -2.5,
           py::arg("omega") = 1.0)
      .def_readwrite("eps0", &ModelParams::eps0)
      .def_readwrite("delta1", &ModelParams::delta1)
      .def_readwrite("delta2", &ModelParams::delta2)
      .def_readwrite("j", &ModelParams::j)
      .def_readwrite("omega", &ModelParams::omega)
      .def_property_readonly("critical_detuning",
                             &ModelParams::critical_detuning);

  py::class_<DriveParams>(m, "DriveParams")
      .def(py::init([](double amplitude, double omega) {
             return DriveParams{amplitude, omega};
           }),
           py::arg("amplitude") = 3.8, py::arg("omega") = 1.0)
      .def_readwrite("amplitude", &DriveParams::amplitude)
      .def_readwrite("omega", &DriveParams::omega);

  py::class_<BathParams>(m, "BathParams")
      .def(py::init([](double kappa, double temperature, double cutoff,
                       double gamma1, double xi) {
             return BathParams{kappa, temperature, cutoff, gamma1, xi};
           }),
           py::arg("kappa") = 0.001, py::arg("temperature") = 0.00467,
           py::arg("cutoff") = 10.0, py::arg("gamma1") = 1.0,
           py::arg("xi") = 0.1)
      .def_readwrite("kappa", &BathParams::kappa)
      .def_readwrite("temperature", &BathParams::temperature)
      .def_readwrite("cutoff", &BathParams::cutoff)
      .def_readwrite("gamma1", &BathParams::gamma1)
      .def_readwrite("xi", &BathParams::xi);

  m.def("hamiltonian",
        [](const ModelParams& p) { return to_py(build_h0(p)); },
        py::arg("model"), "static Hamiltonian in the computational basis");

  m.def("coupling_operator",
        [](double gamma1, double xi) {
          return to_py(build_coupling_op(gamma1, xi));
        },
        py::arg("gamma1") = 1.0, py::arg("xi") = 0.1);

  m.def("eigensystem",
        [](const ModelParams& p) {
          const EigenSystem eig = diagonalize_h0(p);
          std::vector<std::string> labels;
          for (int i = 0; i < 4; ++i)
            labels.push_back(to_string(eig.index_to_label[i]));
          return py::make_tuple(eig.energies, to_py(eig.states), labels);
        },
        py::arg("model"),
        "energies (ascending), eigenvectors (columns), state labels");

  m.def("quasienergies",
        [](const ModelParams& p, const DriveParams& d, double rk_tol) {
          return solve_floquet_auto(p, d, rk_tol).quasienergies;
        },
        py::arg("model"), py::arg("drive"), py::arg("rk_tol") = 1e-10,
        "folded quasienergies, ascending");

  m.def("spectral_density", &spectral_density, py::arg("omega_arg"),
        py::arg("bath"));
  m.def("thermal_weight", &thermal_weight, py::arg("omega_arg"),
        py::arg("bath"));

  m.def("concurrence",
        [](const PyMatrix& rho) {
          DensityMatrix d;
          d.basis = Basis::computational;
          d.m = from_py(rho);
          const ConcurrenceResult r = concurrence(d);
          return py::make_tuple(r.value, r.lambdas);
        },
        py::arg("rho"),
        "Wootters concurrence and the spin-flipped spectrum");

  m.def("fgr_rates",
        [](const ModelParams& p, const BathParams& b) {
          return rates_to_py(
              fgr_rates(diagonalize_h0(p), b.coupling_op(), b));
        },
        py::arg("model"), py::arg("bath"),
        "golden-rule decay rates between H0 eigenstates; [f][i] is i->f");

  m.def("fgr_rates_perturbative",
        [](const ModelParams& p, const BathParams& b) {
          return rates_to_py(fgr_rates_perturbative(p, b));
        },
        py::arg("model"), py::arg("bath"));

  m.def("run_point",
        [](const ModelParams& p, const DriveParams& d, const BathParams& b,
           int ramp_steps) {
          PointConfig cfg;
          cfg.model = p;
          cfg.drive = d;
          cfg.bath = b;
          cfg.num.ramp_steps = ramp_steps;
          const PointRecord r = run_point(cfg);
          py::dict out;
          out["c_inf"] = r.c_inf;
          out["populations"] = r.populations;
          out["gamma_12"] = r.gamma_12;
          out["gamma_02"] = r.gamma_02;
          out["gamma_23"] = r.gamma_23;
          out["flag_resonance"] = r.flag_resonance;
          out["flag_ambiguous_labels"] = r.flag_ambiguous_labels;
          out["error"] = r.error;
          return out;
        },
        py::arg("model"), py::arg("drive"), py::arg("bath"),
        py::arg("ramp_steps") = 64,
        "steady-state concurrence and populations at one parameter point");

#ifdef FLOQSIM_VERSION
  m.attr("__version__") = FLOQSIM_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
