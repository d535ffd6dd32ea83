#pragma once

#include <limits>
#include <string>

#include "floqsim/bath.hpp"
#include "floqsim/concurrence.hpp"
#include "floqsim/dynamics.hpp"
#include "floqsim/floquet.hpp"
#include "floqsim/model.hpp"

namespace floqsim {

struct NumericsConfig {
  int kmax = 0;               ///< Fourier truncation, 0 = automatic
  double rk_tol = 1e-10;      ///< propagator tolerance
  int ramp_steps = 64;        ///< labeling ramp resolution
  double ramp_tol = 1e-8;     ///< propagator tolerance during the ramp
  double null_tol = 1e-9;     ///< kernel tolerance of the steady solve
  long horizon = 20000;       ///< trace length in periods
  long stride = 1;            ///< recording stride in periods
};

struct PointConfig {
  ModelParams model;
  DriveParams drive;
  BathParams bath;
  NumericsConfig num;
};

/// Everything computed once per parameter point; reused by the reports.
struct PointSolution {
  EigenSystem eig;
  FloquetSolution sol;
  GeneratorQ0 gen;
  RateTable rates_floquet;
};

/// Result row of a single steady-state evaluation. A failed point carries
/// the error text and NaN values instead of aborting a sweep.
struct PointRecord {
  double c_inf = std::numeric_limits<double>::quiet_NaN();
  std::array<double, 4> populations{
      std::numeric_limits<double>::quiet_NaN(),
      std::numeric_limits<double>::quiet_NaN(),
      std::numeric_limits<double>::quiet_NaN(),
      std::numeric_limits<double>::quiet_NaN()};
  double gamma_12 = std::numeric_limits<double>::quiet_NaN();
  double gamma_02 = std::numeric_limits<double>::quiet_NaN();
  double gamma_23 = std::numeric_limits<double>::quiet_NaN();
  double min_quasienergy_gap = 0.0;
  bool flag_resonance = false;
  bool flag_ambiguous_labels = false;
  std::string error;

  bool ok() const { return error.empty(); }
};

/// Runs model -> floquet -> bath -> generator; throws on failure.
PointSolution solve_point(const PointConfig& cfg);

/// Full chain to steady concurrence and populations; never throws, errors
/// are captured in the record.
PointRecord run_point(const PointConfig& cfg);

}  // namespace floqsim
