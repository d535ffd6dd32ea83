#pragma once

#include <array>
#include <vector>

#include "floqsim/bath.hpp"
#include "floqsim/complex_matrix.hpp"
#include "floqsim/floquet.hpp"
#include "floqsim/model.hpp"

namespace floqsim {

enum class Basis { computational, eigenstate, floquet };

/// 4x4 density matrix tagged with the frame it is written in; `time` is in
/// units of the drive period.
struct DensityMatrix {
  ComplexMatrix m{4};
  Basis basis = Basis::computational;
  double time = 0.0;
};

/// Stroboscopic trajectory. `states` are in the Floquet basis,
/// `states_comp` in the computational basis (t=0 frame), `populations`
/// in the H0 eigenstate basis.
struct EvolutionRecord {
  std::vector<double> times;  ///< in periods
  std::vector<DensityMatrix> states;
  std::vector<DensityMatrix> states_comp;
  std::vector<std::array<double, 4>> populations;
};

/// Ground state of H0 written in the Floquet basis at t = 0.
DensityMatrix initial_state(const EigenSystem& eig,
                            const FloquetSolution& sol);

/// Propagates the master equation stroboscopically for `horizon` periods,
/// recording every `stride` periods (exact exponential of the constant
/// generator, no step error). Throws NonphysicalState if a recorded state
/// develops an eigenvalue below -1e-6.
EvolutionRecord evolve(const GeneratorQ0& gen, const FloquetSolution& sol,
                       const EigenSystem& eig, const DensityMatrix& rho0,
                       long horizon, long stride = 1);

/// Same propagation, recording only at the given period indices
/// (ascending). Used for thinned long-horizon traces.
EvolutionRecord evolve_sampled(const GeneratorQ0& gen,
                               const FloquetSolution& sol,
                               const EigenSystem& eig,
                               const DensityMatrix& rho0,
                               const std::vector<long>& record_periods);

/// Steady state as the kernel of the full generator, Hermitized and
/// normalized to unit trace. Throws DegenerateSteadyState when the kernel
/// has more than one direction.
DensityMatrix steady_state(const GeneratorQ0& gen,
                           const FloquetSolution& sol,
                           double null_tol = 1e-9);

/// Every kernel direction of the generator, Hermitized (trace-normalized
/// when the direction carries trace). Degenerate steady manifolds at exact
/// resonances report all members here.
std::vector<DensityMatrix> steady_state_candidates(const GeneratorQ0& gen,
                                                   const FloquetSolution& sol,
                                                   double null_tol = 1e-9);

/// One-period average of a Floquet-basis state, returned in the
/// computational basis.
DensityMatrix period_average(const DensityMatrix& rho_floq,
                             const FloquetSolution& sol);

/// Frame change between computational / eigenstate / Floquet bases; the
/// Floquet frame is evaluated at time t (units of the period).
DensityMatrix to_basis(const DensityMatrix& rho, Basis target,
                       const FloquetSolution& sol, const EigenSystem& eig,
                       double t = 0.0);

/// Eigenstate-basis populations of a Floquet-basis state via the t = 0
/// mode overlaps.
std::array<double, 4> populations_in_eigenbasis(const DensityMatrix& rho_floq,
                                                const FloquetSolution& sol,
                                                const EigenSystem& eig);

}  // namespace floqsim
