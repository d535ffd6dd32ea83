#pragma once

#include <array>
#include <utility>
#include <vector>

#include "floqsim/dynamics.hpp"

namespace floqsim {

/// Wootters concurrence of a two-qubit state plus the spin-flipped
/// spectrum it derives from (descending).
struct ConcurrenceResult {
  double value = 0.0;
  std::array<double, 4> lambdas{};
};

/// Spin-flipped state (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)
/// in the computational basis.
ComplexMatrix spin_flip(const ComplexMatrix& rho);

/// Concurrence max(0, l1 - l2 - l3 - l4) with l_i the descending square
/// roots of the eigenvalues of rho * spin_flip(rho). Input must be a valid
/// computational-basis density matrix; NonPhysicalInput otherwise.
ConcurrenceResult concurrence(const DensityMatrix& rho);

/// Concurrence at each recorded stroboscopic instant of a trajectory.
std::vector<std::pair<double, double>> concurrence_trace(
    const EvolutionRecord& rec);

}  // namespace floqsim
