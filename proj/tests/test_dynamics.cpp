#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "floqsim/concurrence.hpp"
#include "floqsim/dynamics.hpp"
#include "floqsim/errors.hpp"
#include "floqsim/numerics.hpp"
#include "support/oracles.hpp"

using namespace floqsim;

namespace {
const ModelParams kPaperModel{3.7, 0.1, 0.15, -2.5, 1.0};
const DriveParams kPaperDrive{3.8, 1.0};
const BathParams kPaperBath{0.001, 0.00467, 10.0, 1.0, 0.1};

struct Workspace {
  EigenSystem eig;
  FloquetSolution sol;
  GeneratorQ0 gen;
};

Workspace make_workspace(const ModelParams& p, const DriveParams& d,
                         const BathParams& b) {
  Workspace w;
  w.eig = diagonalize_h0(p);
  w.sol = solve_floquet_auto(p, d);
  apply_labels(w.sol, label_floquet_states_best_effort(w.sol, w.eig, 32));
  const TransitionTable at = transition_elements(w.sol, b.coupling_op());
  const ThermalTable gt = thermal_table(w.sol, b, at.krange);
  w.gen = generator_q0(rate_tensor(gt, at), w.sol);
  return w;
}

double purity(const ComplexMatrix& rho) {
  return (rho * rho).trace().real();
}

}  // namespace

TEST_CASE("initial state: pure ground state in the Floquet frame") {
  const Workspace w0 =
      make_workspace(kPaperModel, DriveParams{0.0, 1.0}, kPaperBath);
  const DensityMatrix rho0 = initial_state(w0.eig, w0.sol);
  CHECK(rho0.m.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(rho0.m) == doctest::Approx(1.0).epsilon(1e-12));
  // undriven: a single diagonal entry carries all the weight
  int ones = 0;
  for (int a = 0; a < 4; ++a)
    if (std::abs(rho0.m(a, a).real() - 1.0) < 1e-10) ++ones;
  CHECK(ones == 1);

  const Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  const DensityMatrix rho = initial_state(w.eig, w.sol);
  CHECK(purity(rho.m) == doctest::Approx(1.0).epsilon(1e-12));
  // off resonance the dominant entry is the mode labeled as the ground state
  const int a0 = w.sol.alpha_of_state(0);
  for (int a = 0; a < 4; ++a)
    if (a != a0) CHECK(rho.m(a0, a0).real() > rho.m(a, a).real());
}

TEST_CASE("zero generator: coherent evolution keeps Floquet populations") {
  Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  BathParams off = kPaperBath;
  off.gamma1 = 0.0;
  const TransitionTable at = transition_elements(w.sol, off.coupling_op());
  const ThermalTable gt = thermal_table(w.sol, off, at.krange);
  const GeneratorQ0 gen0 = generator_q0(rate_tensor(gt, at), w.sol);

  const DensityMatrix rho0 = initial_state(w.eig, w.sol);
  const EvolutionRecord rec = evolve(gen0, w.sol, w.eig, rho0, 1000, 100);
  for (const DensityMatrix& s : rec.states)
    for (int a = 0; a < 4; ++a)
      CHECK(std::abs(s.m(a, a) - rho0.m(a, a)) < 1e-10);
  for (const auto& p : rec.populations) {
    double sum = 0.0;
    for (double x : p) sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("trace conserved along a long dissipative evolution") {
  Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  const DensityMatrix rho0 = initial_state(w.eig, w.sol);
  const EvolutionRecord rec = evolve(w.gen, w.sol, w.eig, rho0, 10000, 500);
  for (const DensityMatrix& s : rec.states)
    CHECK(std::abs(s.m.trace().real() - 1.0) < 1e-9);
}

TEST_CASE("relaxation funnels into the entangled first excited state") {
  Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  const DensityMatrix rho0 = initial_state(w.eig, w.sol);
  const EvolutionRecord rec =
      evolve_sampled(w.gen, w.sol, w.eig, rho0,
                     {0, 1000, 3000, 10000, 30000, 100000, 300000});
  // monotone growth of P1 after the coherent transient
  for (size_t i = 2; i < rec.populations.size(); ++i)
    CHECK(rec.populations[i][1] >= rec.populations[i - 1][1] - 1e-6);
  CHECK(rec.populations.back()[1] > 0.9);
}

TEST_CASE("kernel steady state matches the long-time limit") {
  Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  const DensityMatrix rho_inf = steady_state(w.gen, w.sol);
  CHECK(std::abs(rho_inf.m.trace().real() - 1.0) < 1e-12);
  CHECK(hermitian_eig(rho_inf.m).values.front() > -1e-8);

  const DensityMatrix rho0 = initial_state(w.eig, w.sol);
  const EvolutionRecord rec =
      evolve_sampled(w.gen, w.sol, w.eig, rho0, {10000000});
  const ComplexMatrix diff = rec.states.back().m - rho_inf.m;
  CHECK(diff.max_abs() < 1e-6);
}

TEST_CASE("undriven steady state is the thermal ground state") {
  const Workspace w =
      make_workspace(kPaperModel, DriveParams{0.0, 1.0}, kPaperBath);
  const DensityMatrix rho_inf = steady_state(w.gen, w.sol);
  const auto p = populations_in_eigenbasis(rho_inf, w.sol, w.eig);
  CHECK(p[0] > 1.0 - 1e-9);
}

TEST_CASE("steady state with zero coupling is reported as degenerate") {
  Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  BathParams off = kPaperBath;
  off.gamma1 = 0.0;
  const TransitionTable at = transition_elements(w.sol, off.coupling_op());
  const ThermalTable gt = thermal_table(w.sol, off, at.krange);
  const GeneratorQ0 gen0 = generator_q0(rate_tensor(gt, at), w.sol);
  CHECK_THROWS_AS(steady_state(gen0, w.sol), DegenerateSteadyState);
  try {
    steady_state(gen0, w.sol);
  } catch (const DegenerateSteadyState& e) {
    CHECK(e.kernel_dim > 1);
  }
  // all stationary directions are reported
  CHECK(steady_state_candidates(gen0, w.sol).size() > 1);
}

TEST_CASE("evolve rejects a nonphysical initial state") {
  Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  BathParams off = kPaperBath;
  off.gamma1 = 0.0;
  const TransitionTable at = transition_elements(w.sol, off.coupling_op());
  const ThermalTable gt = thermal_table(w.sol, off, at.krange);
  const GeneratorQ0 gen0 = generator_q0(rate_tensor(gt, at), w.sol);

  DensityMatrix bad;
  bad.basis = Basis::floquet;
  bad.m(0, 0) = 1.001;
  bad.m(1, 1) = -0.001;
  CHECK_THROWS_AS(evolve(gen0, w.sol, w.eig, bad, 10, 1), NonphysicalState);
}

TEST_CASE("secular flavor keeps the state positive along the trajectory") {
  Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  const GeneratorQ0 sec = make_secular(w.gen);
  const DensityMatrix rho0 = initial_state(w.eig, w.sol);
  const EvolutionRecord rec = evolve(sec, w.sol, w.eig, rho0, 20000, 1000);
  for (const DensityMatrix& s : rec.states)
    CHECK(hermitian_eig(s.m).values.front() >= -1e-10);
  // and relaxes to the same steady state as the full flavor
  const DensityMatrix s_full = steady_state(w.gen, w.sol);
  const DensityMatrix s_sec = steady_state(sec, w.sol);
  CHECK((s_full.m - s_sec.m).max_abs() < 1e-4);
}

TEST_CASE("period average: undriven case and maximally mixed state") {
  const Workspace w0 =
      make_workspace(kPaperModel, DriveParams{0.0, 1.0}, kPaperBath);
  const DensityMatrix rho_inf = steady_state(w0.gen, w0.sol);
  const DensityMatrix avg = period_average(rho_inf, w0.sol);
  const DensityMatrix direct =
      to_basis(rho_inf, Basis::computational, w0.sol, w0.eig);
  CHECK((avg.m - direct.m).max_abs() < 1e-10);

  const Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  DensityMatrix mixed;
  mixed.basis = Basis::floquet;
  for (int a = 0; a < 4; ++a) mixed.m(a, a) = 0.25;
  const DensityMatrix avg_mixed = period_average(mixed, w.sol);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(std::abs(avg_mixed.m(r, c) - (r == c ? cd(0.25, 0) : cd(0, 0))) <
            1e-8);
}

TEST_CASE("period average converges in the sampling resolution") {
  const FloquetSolution a = solve_floquet(kPaperModel, kPaperDrive, 16, 64);
  const FloquetSolution b = solve_floquet(kPaperModel, kPaperDrive, 16, 128);
  DensityMatrix rho;
  rho.basis = Basis::floquet;
  rho.m(0, 0) = 0.6;
  rho.m(1, 1) = 0.4;
  rho.m(0, 1) = rho.m(1, 0) = 0.2;
  const DensityMatrix avg_a = period_average(rho, a);
  const DensityMatrix avg_b = period_average(rho, b);
  CHECK((avg_a.m - avg_b.m).max_abs() < 1e-8);
}

TEST_CASE("basis changes: round trip, spectrum, perturbative limit") {
  const Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  std::mt19937 rng(3);
  const ComplexMatrix rho = test::random_density(4, rng);
  DensityMatrix d;
  d.basis = Basis::computational;
  d.m = rho;
  const DensityMatrix fl = to_basis(d, Basis::floquet, w.sol, w.eig);
  const DensityMatrix back =
      to_basis(fl, Basis::computational, w.sol, w.eig);
  CHECK((back.m - rho).max_abs() < 1e-10);

  const EigenDecomposition s0 = hermitian_eig(rho);
  const EigenDecomposition s1 = hermitian_eig(fl.m);
  for (int i = 0; i < 4; ++i)
    CHECK(s0.values[i] == doctest::Approx(s1.values[i]).epsilon(1e-9));

  // eigenstate ground state looks like |00> far above the crossing
  DensityMatrix ge;
  ge.basis = Basis::eigenstate;
  ge.m(0, 0) = 1.0;
  const DensityMatrix gc =
      to_basis(ge, Basis::computational, w.sol, w.eig);
  CHECK(gc.m(0, 0).real() > 0.999);
}

TEST_CASE("static concurrence traces follow the ground-state character") {
  // separable ground state above the crossing: flat C ~ 0
  const Workspace far =
      make_workspace(kPaperModel, DriveParams{0.0, 1.0}, kPaperBath);
  const EvolutionRecord rec_far = evolve(
      far.gen, far.sol, far.eig, initial_state(far.eig, far.sol), 2000, 200);
  for (const auto& [t, c] : concurrence_trace(rec_far)) CHECK(c < 0.05);

  // entangled ground state below the crossing: flat C ~ 1
  ModelParams inside = kPaperModel;
  inside.eps0 = 0.5;
  const Workspace in =
      make_workspace(inside, DriveParams{0.0, 1.0}, kPaperBath);
  const EvolutionRecord rec_in = evolve(
      in.gen, in.sol, in.eig, initial_state(in.eig, in.sol), 2000, 200);
  for (const auto& [t, c] : concurrence_trace(rec_in)) CHECK(c > 0.95);
}

TEST_CASE("basis tag outside the enumeration is rejected") {
  const Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  DensityMatrix rho;
  rho.basis = static_cast<Basis>(99);
  rho.m(0, 0) = 1.0;
  CHECK_THROWS_AS(to_basis(rho, Basis::computational, w.sol, w.eig),
                  UnknownBasis);
}

TEST_CASE("concurrence trace rises toward one at the working point") {
  Workspace w = make_workspace(kPaperModel, kPaperDrive, kPaperBath);
  const DensityMatrix rho0 = initial_state(w.eig, w.sol);
  const EvolutionRecord rec =
      evolve_sampled(w.gen, w.sol, w.eig, rho0, {0, 100000, 300000});
  const auto trace = concurrence_trace(rec);
  CHECK(trace.front().second < 0.1);
  CHECK(trace.back().second > 0.9);
}
