#include "floqsim/pipeline.hpp"

#include "floqsim/errors.hpp"

namespace floqsim {

namespace {
// Folded quasienergy gaps below this fraction of omega mark a multiphoton
// resonance where the secular picture degrades.
constexpr double kResonanceGapFraction = 1e-3;
}  // namespace

PointSolution solve_point(const PointConfig& cfg) {
  PointSolution ps;
  ps.eig = diagonalize_h0(cfg.model);
  ps.sol = solve_floquet_auto(cfg.model, cfg.drive, cfg.num.rk_tol,
                              cfg.num.kmax);
  apply_labels(ps.sol,
               label_floquet_states_best_effort(
                   ps.sol, ps.eig, cfg.num.ramp_steps, cfg.num.ramp_tol));

  const TransitionTable at =
      transition_elements(ps.sol, cfg.bath.coupling_op());
  const ThermalTable gt = thermal_table(ps.sol, cfg.bath, at.krange);
  ps.gen = generator_q0(rate_tensor(gt, at), ps.sol);
  ps.rates_floquet = floquet_rates(ps.sol, at, cfg.bath);
  return ps;
}

PointRecord run_point(const PointConfig& cfg) {
  PointRecord rec;
  try {
    const PointSolution ps = solve_point(cfg);
    rec.min_quasienergy_gap = ps.sol.min_quasienergy_gap;
    rec.flag_resonance = ps.sol.min_quasienergy_gap <
                         kResonanceGapFraction * ps.sol.omega();
    rec.flag_ambiguous_labels = ps.sol.ambiguous_labels;
    rec.gamma_12 = ps.rates_floquet.rates[1][2];
    rec.gamma_02 = ps.rates_floquet.rates[0][2];
    rec.gamma_23 = ps.rates_floquet.rates[2][3];

    const DensityMatrix rho_inf =
        steady_state(ps.gen, ps.sol, cfg.num.null_tol);
    rec.populations = populations_in_eigenbasis(rho_inf, ps.sol, ps.eig);
    rec.c_inf = concurrence(period_average(rho_inf, ps.sol)).value;
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

}  // namespace floqsim
