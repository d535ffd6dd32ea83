#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "floqsim/errors.hpp"
#include "floqsim/floquet.hpp"
#include "floqsim/numerics.hpp"
#include "support/oracles.hpp"

using namespace floqsim;

namespace {
const ModelParams kPaperModel{3.7, 0.1, 0.15, -2.5, 1.0};
const DriveParams kPaperDrive{3.8, 1.0};

double fold(double e, double omega) {
  double g = std::fmod(e + omega / 2.0, omega);
  if (g < 0.0) g += omega;
  return g - omega / 2.0;
}
}  // namespace

TEST_CASE("undriven propagator has the static eigenphases") {
  const DriveParams d{0.0, 1.0};
  const ComplexMatrix u = propagate_period(kPaperModel, d);
  const EigenDecomposition eh = hermitian_eig(build_h0(kPaperModel));
  const UnitaryEigenDecomposition eu = unitary_eig(u);
  for (const cd& lam : eu.values) {
    double best = 1e9;
    for (double ek : eh.values)
      best = std::min(best,
                      std::abs(lam - std::exp(cd(0.0, -ek * d.period()))));
    CHECK(best < 1e-9);
  }
}

TEST_CASE("driven propagator stays unitary") {
  const ComplexMatrix u = propagate_period(kPaperModel, kPaperDrive);
  const double defect =
      (u.adjoint() * u - ComplexMatrix::identity(4)).frobenius_norm();
  CHECK(defect < 1e-8);
}

TEST_CASE("propagator matches the extended-space oracle") {
  const test::ExtendedSpaceSolution oracle =
      test::sambe_solve(kPaperModel, kPaperDrive, 24);
  const ComplexMatrix u = propagate_period(kPaperModel, kPaperDrive);
  CHECK((u - oracle.propagator).max_abs() < 1e-7);
}

TEST_CASE("quasienergies match the extended-space oracle") {
  const test::ExtendedSpaceSolution oracle =
      test::sambe_solve(kPaperModel, kPaperDrive, 24);
  const FloquetSolution sol = solve_floquet_auto(kPaperModel, kPaperDrive);
  for (int a = 0; a < 4; ++a)
    CHECK(std::abs(sol.quasienergies[a] - oracle.quasienergies[a]) < 1e-7);
}

TEST_CASE("undriven solve: folded energies and single Fourier component") {
  const DriveParams d{0.0, 1.0};
  const FloquetSolution sol = solve_floquet(kPaperModel, d, 4, 32);
  const EigenDecomposition eh = hermitian_eig(build_h0(kPaperModel));
  std::array<double, 4> folded;
  for (int k = 0; k < 4; ++k) folded[k] = fold(eh.values[k], 1.0);
  std::sort(folded.begin(), folded.end());
  for (int a = 0; a < 4; ++a)
    CHECK(std::abs(sol.quasienergies[a] - folded[a]) < 1e-9);

  // a single Fourier rung carries all the weight: the folding index
  // K = E - gamma, and the component is an H0 eigenstate
  for (int a = 0; a < 4; ++a) {
    int kstar = 0;
    double wmax = -1.0;
    double total = 0.0;
    for (int k = -sol.kmax; k <= sol.kmax; ++k) {
      const double w = vnorm2(sol.mode_fourier(a, k));
      total += w;
      if (w > wmax) {
        wmax = w;
        kstar = k;
      }
    }
    CHECK(wmax == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(total - wmax < 1e-9);
    const Vector v = sol.mode_fourier(a, kstar);
    double best = 0.0;
    int karg = -1;
    for (int k = 0; k < 4; ++k) {
      const double ov = std::abs(vdot(eh.vectors.column(k), v));
      if (ov > best) {
        best = ov;
        karg = k;
      }
    }
    CHECK(best == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(kstar ==
          std::lround(eh.values[karg] - sol.quasienergies[a]));
  }
}

TEST_CASE("solution invariants: completeness, Parseval, tail, reconstruction") {
  const FloquetSolution sol = solve_floquet_auto(kPaperModel, kPaperDrive);
  CHECK(sol.completeness_defect < 1e-8);
  CHECK(sol.tail_weight < 1e-10);
  CHECK(sol.reconstruction_error < 1e-8);
  for (int a = 0; a < 4; ++a) {
    double parseval = 0.0;
    for (int k = -sol.kmax; k <= sol.kmax; ++k)
      parseval += vnorm2(sol.mode_fourier(a, k));
    CHECK(parseval == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("modes converge to eigenstates as the drive vanishes") {
  const EigenSystem eig = diagonalize_h0(kPaperModel);
  for (double a : {0.5, 0.25, 0.125}) {
    const FloquetSolution sol =
        solve_floquet_auto(kPaperModel, DriveParams{a, 1.0});
    // worst-case best-overlap against the eigenbasis shrinks as A^2
    double worst = 1.0;
    for (int al = 0; al < 4; ++al) {
      double best = 0.0;
      for (int k = 0; k < 4; ++k)
        best = std::max(best, std::abs(vdot(eig.states.column(k),
                                            sol.modes_t0.column(al))));
      worst = std::min(worst, best);
    }
    CHECK(1.0 - worst < 0.2 * a * a + 1e-6);
  }
}

TEST_CASE("labeling: direct overlap at zero and weak amplitude") {
  const EigenSystem eig = diagonalize_h0(kPaperModel);
  auto direct_overlap_perm = [&](const FloquetSolution& s) {
    std::array<int, 4> perm{};
    for (int al = 0; al < 4; ++al) {
      double best = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double ov =
            std::abs(vdot(eig.states.column(k), s.modes_t0.column(al)));
        if (ov > best) {
          best = ov;
          perm[al] = k;
        }
      }
    }
    return perm;
  };

  // no drive: ramp degenerates to the pure association of each Floquet
  // state with the eigenstate it equals
  const FloquetSolution sol0 =
      solve_floquet_auto(kPaperModel, DriveParams{0.0, 1.0});
  CHECK(label_floquet_states(sol0, eig, 16) == direct_overlap_perm(sol0));

  // below the crossover amplitude the driven states stay put
  const FloquetSolution solw =
      solve_floquet_auto(kPaperModel, DriveParams{1.0, 1.0});
  CHECK(label_floquet_states(solw, eig, 32) == direct_overlap_perm(solw));
}

TEST_CASE("labeling stable under ramp refinement") {
  const EigenSystem eig = diagonalize_h0(kPaperModel);
  const FloquetSolution sol = solve_floquet_auto(kPaperModel, kPaperDrive);
  const auto p32 = label_floquet_states(sol, eig, 32);
  const auto p64 = label_floquet_states(sol, eig, 64);
  CHECK(p32 == p64);
}

TEST_CASE("deep in the entangled region the ramp is flagged ambiguous") {
  // strongly driven point below the crossing: quasienergy collisions along
  // the ramp make the continuation ill-defined
  const ModelParams p{0.25, 0.1, 0.15, -2.5, 1.0};
  const DriveParams d{4.5, 1.0};
  const EigenSystem eig = diagonalize_h0(p);
  const FloquetSolution sol = solve_floquet_auto(p, d, 1e-9);
  CHECK_THROWS_AS(label_floquet_states(sol, eig, 16, 1e-7),
                  AmbiguousTracking);
  const LabelResult res =
      label_floquet_states_best_effort(sol, eig, 16, 1e-7);
  CHECK(res.ambiguous);
  // best effort still yields a usable permutation
  std::array<bool, 4> seen{};
  for (int a = 0; a < 4; ++a) seen[res.perm[a]] = true;
  for (bool b : seen) CHECK(b);
}

TEST_CASE("kmax doubling leaves quasienergies and tail unchanged") {
  const FloquetSolution a = solve_floquet(kPaperModel, kPaperDrive, 16, 64);
  const FloquetSolution b = solve_floquet(kPaperModel, kPaperDrive, 32, 128);
  for (int al = 0; al < 4; ++al)
    CHECK(std::abs(a.quasienergies[al] - b.quasienergies[al]) < 1e-9);
  CHECK(b.tail_weight < 1e-10);
}

TEST_CASE("solve_floquet validates truncation parameters") {
  CHECK_THROWS_AS(solve_floquet(kPaperModel, kPaperDrive, 0, 16), Error);
  CHECK_THROWS_AS(solve_floquet(kPaperModel, kPaperDrive, 8, 10), Error);
}
