#pragma once

#include <array>
#include <string>
#include <vector>

#include "floqsim/config.hpp"
#include "floqsim/sweep.hpp"

namespace floqsim {

extern const char* kVersion;

/// Transition rates versus asymmetry in all four representations
/// (perturbative / exact golden rule / driven effective / Floquet) for the
/// five relevant decay channels, plus the extracted crossover per basis.
struct RatesReportData {
  std::vector<double> xi;
  /// col[basis][pair][i]: basis order pert, fgr, eff, floq;
  /// pair order 12, 02, 23, 01, 13.
  std::array<std::array<std::vector<double>, 5>, 4> col;
  std::array<double, 4> xi_c;
  std::string csv;
};

RatesReportData rates_report(const RunConfig& cfg);

/// Stroboscopic populations and concurrence of one evolution.
struct TraceReportData {
  std::vector<double> t;
  std::array<std::vector<double>, 4> p;
  std::vector<double> c;
  std::string csv;
};

TraceReportData trace_report(const RunConfig& cfg);

/// Static spectrum versus detuning with the ground-state concurrence.
struct SpectrumReportData {
  std::vector<double> eps0;
  std::array<std::vector<double>, 4> e;
  std::vector<double> c_ground;
  std::string csv;
};

SpectrumReportData spectrum_report(const RunConfig& cfg);

/// CSV for point/sweep products (steady concurrence, populations, rates).
std::string csv_steady(const SweepResult& result);

std::string provenance_text(
    const RunConfig& cfg, const std::string& subcommand, double wall_seconds,
    int workers,
    const std::vector<std::pair<std::string, std::string>>& extra = {});

void write_text_file(const std::string& path, const std::string& content);

/// 17-significant-digit formatting used in every CSV cell.
std::string format_double(double v);

}  // namespace floqsim
