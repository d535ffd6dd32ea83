#pragma once

#include <array>
#include <functional>
#include <vector>

#include "floqsim/complex_matrix.hpp"
#include "floqsim/floquet.hpp"
#include "floqsim/model.hpp"

namespace floqsim {

/// Ohmic bath with exponential cutoff plus the two qubit-bath coupling
/// strengths; energies in units of omega, k_B = 1.
struct BathParams {
  double kappa = 0.001;         ///< dimensionless Ohmic strength
  double temperature = 0.00467; ///< bath temperature
  double cutoff = 10.0;         ///< spectral cutoff omega_c
  double gamma1 = 1.0;          ///< coupling of qubit 1
  double xi = 1.0;              ///< coupling asymmetry gamma2/gamma1

  ComplexMatrix coupling_op() const;
};

/// Ohmic spectral density kappa * w * exp(-|w|/cutoff); odd in w.
double spectral_density(double w, const BathParams& b);

/// Thermal emission/absorption weight g(w) = J(w) n_th(w), positive for
/// all w != 0 and continued to g(0) = kappa * T. Negative arguments are
/// the emission branch (bath absorbs the quantum).
double thermal_weight(double w, const BathParams& b);

/// log(g(w)) evaluated without under/overflow; defined for w != 0 or
/// w == 0 via the analytic limit.
double log_thermal_weight(double w, const BathParams& b);

/// Floquet-basis matrix elements of a coupling operator,
/// A^K_{ab} = sum_L <u_a(L) | A | u_b(L+K)>, tabulated for |K| <= 2*kmax.
struct TransitionTable {
  int krange = 0;
  std::array<std::array<std::vector<cd>, 4>, 4> elems;

  cd at(int a, int b, int k) const {
    if (k < -krange || k > krange) return cd(0.0, 0.0);
    return elems[a][b][k + krange];
  }
};

TransitionTable transition_elements(const FloquetSolution& sol,
                                    const ComplexMatrix& coupling);

/// Thermal weights at the K-photon-assisted transition energies. The
/// stored value pairs with A^K so that photon emission into the drive is
/// counted with the right sign: g[a][b][K] = g(gamma_a - gamma_b - K*omega).
/// This pairing keeps every downstream rate invariant under Brillouin-zone
/// shifts of the quasienergies.
struct ThermalTable {
  int krange = 0;
  std::array<std::array<std::vector<double>, 4>, 4> g;

  double at(int a, int b, int k) const {
    if (k < -krange || k > krange) return 0.0;
    return g[a][b][k + krange];
  }
};

ThermalTable thermal_table(const FloquetSolution& sol, const BathParams& b,
                           int krange);

/// Two-sided rate tensor R_{ab,a'b'} = sum_K g^K_{aa'} A^K_{aa'} conj(A^K_{bb'}).
struct RateTensor {
  std::array<cd, 256> r{};

  cd& at(int a, int b, int ap, int bp) {
    return r[((a * 4 + b) * 4 + ap) * 4 + bp];
  }
  cd at(int a, int b, int ap, int bp) const {
    return r[((a * 4 + b) * 4 + ap) * 4 + bp];
  }
};

RateTensor rate_tensor(const ThermalTable& g, const TransitionTable& a);

/// Period-averaged dissipative generator in the Floquet basis plus the
/// coherent quasienergy part. Acts on density matrices vectorized
/// row-major as rho[a*4+b].
struct GeneratorQ0 {
  ComplexMatrix dissipator{16};  ///< L coefficients, d rho = ... - L rho
  std::array<double, 4> quasienergies{};
  double omega = 1.0;
  bool secular = false;

  /// G with d(vec rho)/dt = G vec(rho): coherent part minus dissipator.
  ComplexMatrix full_matrix() const;
};

/// Builds the generator from the rate tensor; verifies trace preservation
/// to 1e-10 and throws TraceLeak otherwise.
GeneratorQ0 generator_q0(const RateTensor& r, const FloquetSolution& sol);

/// Secular restriction: couplings between matrix-element pairs with
/// distinct quasienergy gaps are dropped, leaving a Lindblad-type
/// generator (population block plus independently decaying coherences).
GeneratorQ0 make_secular(const GeneratorQ0& gen);

enum class RateBasis { floquet, eigenstate, effective };

/// Pairwise transition rates; rates[f][i] is the rate of i -> f with the
/// golden-rule 2*pi prefactor. The per-photon decomposition satisfies
/// rates[f][i] = sum_n per_photon[f][i][n + nrange].
struct RateTable {
  RateBasis basis = RateBasis::eigenstate;
  std::array<std::array<double, 4>, 4> rates{};
  int nrange = 0;
  std::array<std::array<std::vector<double>, 4>, 4> per_photon;

  double photon(int f, int i, int n) const {
    if (n < -nrange || n > nrange) return 0.0;
    return per_photon[f][i][n + nrange];
  }
};

/// Floquet-basis rates Gamma_{ab} = 2 pi sum_K g^K_{ab} |A^K_{ab}|^2.
/// When the solution is labeled the table is re-indexed so that (f, i)
/// refer to the H0 eigenstates the Floquet states connect to.
RateTable floquet_rates(const FloquetSolution& sol, const TransitionTable& a,
                        const BathParams& b);

/// Golden-rule rates between exact H0 eigenstates.
RateTable fgr_rates(const EigenSystem& eig, const ComplexMatrix& coupling,
                    const BathParams& b);

/// Closed-form golden-rule rates from the first-order eigenstates; only
/// the five pairs with non-vanishing leading matrix elements are filled.
/// Handles both signs of J through the energy ordering of the
/// exchange-split pair.
RateTable fgr_rates_perturbative(const ModelParams& p, const BathParams& b);

/// Driven effective eigenstate rates: Floquet rates weighted by the
/// t = 0 overlaps between Floquet modes and H0 eigenstates.
RateTable effective_rates(const RateTable& floq, const FloquetSolution& sol,
                          const EigenSystem& eig);

/// Asymmetry where rate(f1,i1) and rate(f2,i2) cross, scanned on a uniform
/// xi grid over [lo, hi] and refined linearly; NaN when there is no sign
/// change.
double crossover_xi(const std::function<RateTable(double)>& table_at_xi,
                    int f1, int i1, int f2, int i2, double lo = 0.0,
                    double hi = 1.0, int grid = 81);

}  // namespace floqsim
