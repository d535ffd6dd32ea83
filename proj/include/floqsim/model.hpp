#pragma once

#include <array>

#include "floqsim/complex_matrix.hpp"

namespace floqsim {

/// Static parameters of the coupled qubit pair, all in units of the drive
/// frequency omega (hbar = 1). The computational basis is ordered
/// (|00>, |01>, |10>, |11>) with sigma_z |0> = +|0>.
struct ModelParams {
  double eps0 = 0.0;    ///< common detuning, controls the level crossing
  double delta1 = 0.1;  ///< tunnel splitting of qubit 1
  double delta2 = 0.15; ///< tunnel splitting of qubit 2
  double j = -2.5;      ///< exchange coupling (signed)
  double omega = 1.0;   ///< drive frequency, fixed to 1 by convention

  /// Detuning below which the undriven ground state is entangled.
  double critical_detuning() const { return std::abs(j) / 2.0; }
};

struct DriveParams {
  double amplitude = 0.0;  ///< ac amplitude A in units of omega
  double omega = 1.0;

  double period() const { return 2.0 * M_PI / omega; }
};

/// Character of the four undriven eigenstates: separable ground/top pair
/// and the symmetric/antisymmetric single-excitation pair.
enum class StateLabel { s0 = 0, s1 = 1, e_minus = 2, e_plus = 3 };

const char* to_string(StateLabel l);

/// Exact eigensystem of the static Hamiltonian, energies ascending,
/// eigenvectors as columns of `states` in the computational basis. Each
/// energy index carries the label of the zeroth-order state it overlaps
/// most with.
struct EigenSystem {
  std::array<double, 4> energies{};
  ComplexMatrix states;
  std::array<StateLabel, 4> index_to_label{};
  std::array<int, 4> label_to_index{};  // indexed by StateLabel

  int index_of(StateLabel l) const {
    return label_to_index[static_cast<int>(l)];
  }
};

/// 4x4 static Hamiltonian: detuning on |00>/|11>, exchange block on
/// |01>/|10>, tunnel terms as single-spin flips.
ComplexMatrix build_h0(const ModelParams& p);

/// Longitudinal ac drive at time t: diag(-A cos, 0, 0, +A cos).
ComplexMatrix build_drive(const ModelParams& p, const DriveParams& d,
                          double t);

/// Collective coupling operator gamma1 sigma_z(1) + gamma2 sigma_z(2) with
/// gamma2 = xi * gamma1; diagonal in the computational basis.
ComplexMatrix build_coupling_op(double gamma1, double xi);

/// Diagonalizes H0 and assigns s/e labels by maximal overlap with the
/// zeroth-order states. Throws DegenerateSpectrum if any gap < 1e-12.
EigenSystem diagonalize_h0(const ModelParams& p);

/// First-order eigenstates in the tunnel splittings, normalized, ordered
/// (s0, s1, e-, e+). Throws ResonantDenominator when eps0 is too close to
/// +-J/2 for the expansion to make sense.
std::array<Vector, 4> perturbative_eigenstates(const ModelParams& p);

/// Zeroth-order states (s0, s1, e-, e+) in the computational basis. The
/// singlet-like state is (|10> - |01>)/sqrt(2), fixing the relative signs
/// of the first-order admixtures above.
std::array<Vector, 4> zeroth_order_states();

}  // namespace floqsim
