#pragma once

#include <array>
#include <vector>

#include "floqsim/complex_matrix.hpp"
#include "floqsim/model.hpp"

namespace floqsim {

/// Floquet modes and quasienergies of H0 + V(t) for one parameter point.
///
/// Quasienergies are folded to [-omega/2, omega/2) and sorted ascending.
/// Fourier components follow u(t) = sum_K u(K) exp(-i K omega t); the
/// stored range is |K| <= kmax with nt uniform samples per period backing
/// the transform.
struct FloquetSolution {
  ModelParams model;
  DriveParams drive;

  std::array<double, 4> quasienergies{};
  ComplexMatrix modes_t0;  ///< columns are u_alpha(0)

  int kmax = 0;
  int nt = 0;
  /// fourier[alpha][K + kmax] is the 4-vector u_alpha(K).
  std::array<std::vector<Vector>, 4> fourier;
  /// samples[alpha][j] is u_alpha(t_j), t_j = j * period / nt.
  std::array<std::vector<Vector>, 4> samples;

  /// Floquet index -> H0 eigenstate index; identity until labeled.
  std::array<int, 4> labels{0, 1, 2, 3};
  bool labeled = false;
  bool ambiguous_labels = false;
  double label_margin = 1.0;

  bool degenerate_quasienergies = false;
  double min_quasienergy_gap = 0.0;

  // Truncation diagnostics filled in by solve_floquet.
  double completeness_defect = 0.0;
  double tail_weight = 0.0;
  double reconstruction_error = 0.0;

  double omega() const { return drive.omega; }
  double period() const { return drive.period(); }

  Vector mode_fourier(int alpha, int k) const {
    if (k < -kmax || k > kmax) return Vector(4, cd(0.0, 0.0));
    return fourier[alpha][k + kmax];
  }

  /// Fourier reconstruction of u_alpha(t) at arbitrary t.
  Vector mode_at(int alpha, double t) const;

  /// Frame whose columns are u_alpha(t_j) at sample index j.
  ComplexMatrix frame_at_sample(int j) const;

  /// Floquet index alpha carrying a given H0 eigenstate index.
  int alpha_of_state(int k) const {
    for (int a = 0; a < 4; ++a)
      if (labels[a] == k) return a;
    return -1;
  }
};

/// One-period propagator U(period, 0) by adaptive embedded Runge-Kutta
/// (Dormand-Prince 5(4)) on the Schroedinger equation. Throws
/// StepSizeUnderflow if the controller stalls.
ComplexMatrix propagate_period(const ModelParams& p, const DriveParams& d,
                               double rel_tol = 1e-10);

/// Propagator samples U(t_j, 0) at the nt uniform times plus U(period, 0).
std::vector<ComplexMatrix> propagate_samples(const ModelParams& p,
                                             const DriveParams& d, int nt,
                                             double rel_tol = 1e-10);

/// Full Floquet solve at fixed truncation. Requires kmax >= 1 and
/// nt >= 2*kmax + 2. Near-degenerate folded quasienergies are flagged,
/// not fatal.
FloquetSolution solve_floquet(const ModelParams& p, const DriveParams& d,
                              int kmax, int nt, double rel_tol = 1e-10);

/// Picks kmax = 2*ceil(A/omega) + 8 and doubles it until the Fourier tail
/// weight drops below 1e-10; nt is the smallest power of two >= 4*kmax.
FloquetSolution solve_floquet_auto(const ModelParams& p,
                                   const DriveParams& d,
                                   double rel_tol = 1e-10, int kmax0 = 0);

struct LabelResult {
  std::array<int, 4> perm{0, 1, 2, 3};  ///< Floquet index -> H0 index
  bool ambiguous = false;
  double min_margin = 1.0;  ///< worst best-vs-second overlap separation
};

/// Adiabatic-continuation labeling: the amplitude is ramped from 0 to A in
/// `steps` increments and each state is followed by maximal overlap of
/// u_alpha(0) with the previous step. Strict version throws
/// AmbiguousTracking when the overlap margin drops below 0.05.
std::array<int, 4> label_floquet_states(const FloquetSolution& sol,
                                        const EigenSystem& eig,
                                        int steps = 64,
                                        double ramp_tol = 1e-8);

LabelResult label_floquet_states_best_effort(const FloquetSolution& sol,
                                             const EigenSystem& eig,
                                             int steps = 64,
                                             double ramp_tol = 1e-8);

/// Stores a labeling on the solution object.
void apply_labels(FloquetSolution& sol, const LabelResult& result);

}  // namespace floqsim
