#include "floqsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "floqsim/concurrence.hpp"
#include "floqsim/errors.hpp"

namespace floqsim {

const char* kVersion = "0.1.0";

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

namespace {

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return out;
}

}  // namespace

std::string csv_steady(const SweepResult& result) {
  std::ostringstream os;
  os << "# product = steady_concurrence\n";
  for (size_t i = 0; i < result.axes.size(); ++i)
    os << result.axes[i].name << ",";
  os << "c_inf,p0,p1,p2,p3,gamma_12,gamma_02,gamma_23,"
        "min_quasienergy_gap,flag_resonance,flag_ambiguous_labels,error\n";
  for (const SweepRow& row : result.rows) {
    for (size_t i = 0; i < result.axes.size(); ++i)
      os << format_double(row.coords[i]) << ",";
    const PointRecord& r = row.rec;
    os << format_double(r.c_inf);
    for (int k = 0; k < 4; ++k) os << "," << format_double(r.populations[k]);
    os << "," << format_double(r.gamma_12) << "," << format_double(r.gamma_02)
       << "," << format_double(r.gamma_23) << ","
       << format_double(r.min_quasienergy_gap) << ","
       << (r.flag_resonance ? 1 : 0) << ","
       << (r.flag_ambiguous_labels ? 1 : 0) << "," << sanitize(r.error)
       << "\n";
  }
  return os.str();
}

RatesReportData rates_report(const RunConfig& cfg) {
  if (cfg.axes.size() != 1 || cfg.axes[0].name != "xi")
    throw ConfigError("rates: requires exactly one sweep axis named xi");

  const PointConfig& base = cfg.point;
  const PointSolution ps = solve_point(base);

  static const std::array<std::pair<int, int>, 5> pairs = {
      std::pair{1, 2}, {0, 2}, {2, 3}, {0, 1}, {1, 3}};
  static const char* basis_name[4] = {"perturbative", "fgr", "effective",
                                      "floquet"};
  static const char* pair_name[5] = {"12", "02", "23", "01", "13"};

  auto tables_at = [&](double xi) {
    BathParams b = base.bath;
    b.xi = xi;
    const ComplexMatrix coupling = b.coupling_op();
    std::array<RateTable, 4> t;
    try {
      t[0] = fgr_rates_perturbative(base.model, b);
    } catch (const ResonantDenominator&) {
      t[0] = RateTable{};
      for (auto& row : t[0].rates)
        row.fill(std::numeric_limits<double>::quiet_NaN());
      for (auto& frow : t[0].per_photon)
        for (auto& cell : frow)
          cell = {std::numeric_limits<double>::quiet_NaN()};
    }
    t[1] = fgr_rates(ps.eig, coupling, b);
    const TransitionTable at = transition_elements(ps.sol, coupling);
    t[3] = floquet_rates(ps.sol, at, b);
    t[2] = effective_rates(t[3], ps.sol, ps.eig);
    return t;
  };

  RatesReportData data;
  const SweepAxis& ax = cfg.axes[0];
  for (int i = 0; i < ax.steps; ++i) {
    const double xi = ax.value_at(i);
    data.xi.push_back(xi);
    const std::array<RateTable, 4> t = tables_at(xi);
    for (int b = 0; b < 4; ++b)
      for (int p = 0; p < 5; ++p)
        data.col[b][p].push_back(t[b].rates[pairs[p].first][pairs[p].second]);
  }

  for (int b = 0; b < 4; ++b) {
    data.xi_c[b] = crossover_xi(
        [&](double xi) { return tables_at(xi)[b]; }, 1, 2, 0, 2,
        std::min(ax.min, ax.max), std::max(ax.min, ax.max));
  }

  std::ostringstream os;
  os << "# product = rates_vs_xi\n";
  for (int b = 0; b < 4; ++b)
    os << "# xi_c." << basis_name[b] << " = " << format_double(data.xi_c[b])
       << "\n";
  os << "xi";
  for (int b = 0; b < 4; ++b)
    for (int p = 0; p < 5; ++p) os << "," << basis_name[b] << "_" << pair_name[p];
  os << "\n";
  for (size_t i = 0; i < data.xi.size(); ++i) {
    os << format_double(data.xi[i]);
    for (int b = 0; b < 4; ++b)
      for (int p = 0; p < 5; ++p) os << "," << format_double(data.col[b][p][i]);
    os << "\n";
  }
  data.csv = os.str();
  return data;
}

TraceReportData trace_report(const RunConfig& cfg) {
  if (!cfg.axes.empty())
    throw ConfigError("trace: runs a single point, no sweep axes");

  const PointConfig& pt = cfg.point;
  const PointSolution ps = solve_point(pt);
  const DensityMatrix rho0 = initial_state(ps.eig, ps.sol);

  std::vector<long> times;
  if (cfg.thin == "log") {
    std::set<long> uniq{0};
    const int n = std::max(2, cfg.trace_points);
    for (int i = 0; i < n; ++i) {
      const double x =
          std::pow(static_cast<double>(pt.num.horizon), i / (n - 1.0));
      uniq.insert(std::lround(x));
    }
    uniq.insert(pt.num.horizon);
    times.assign(uniq.begin(), uniq.end());
  } else {
    for (long m = 0; m <= pt.num.horizon; m += pt.num.stride)
      times.push_back(m);
  }

  const EvolutionRecord rec =
      evolve_sampled(ps.gen, ps.sol, ps.eig, rho0, times);

  TraceReportData data;
  std::ostringstream os;
  os << "# product = populations_trace\n";
  os << "t_over_tau,p0,p1,p2,p3,concurrence\n";
  for (size_t i = 0; i < rec.times.size(); ++i) {
    const double c = concurrence(rec.states_comp[i]).value;
    data.t.push_back(rec.times[i]);
    for (int k = 0; k < 4; ++k) data.p[k].push_back(rec.populations[i][k]);
    data.c.push_back(c);
    os << format_double(rec.times[i]);
    for (int k = 0; k < 4; ++k)
      os << "," << format_double(rec.populations[i][k]);
    os << "," << format_double(c) << "\n";
  }
  data.csv = os.str();
  return data;
}

SpectrumReportData spectrum_report(const RunConfig& cfg) {
  if (cfg.axes.size() != 1 || cfg.axes[0].name != "eps0")
    throw ConfigError("spectrum: requires exactly one sweep axis named eps0");

  SpectrumReportData data;
  std::ostringstream os;
  os << "# product = spectrum\n";
  os << "eps0,e0,e1,e2,e3,ground_concurrence\n";
  const SweepAxis& ax = cfg.axes[0];
  for (int i = 0; i < ax.steps; ++i) {
    const double eps0 = ax.value_at(i);
    ModelParams p = cfg.point.model;
    p.eps0 = eps0;
    double e[4];
    double cg;
    try {
      const EigenSystem eig = diagonalize_h0(p);
      for (int k = 0; k < 4; ++k) e[k] = eig.energies[k];
      DensityMatrix ground;
      ground.basis = Basis::computational;
      const Vector v = eig.states.column(0);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          ground.m(r, c) = v[r] * std::conj(v[c]);
      cg = concurrence(ground).value;
    } catch (const Error&) {
      for (double& x : e) x = std::numeric_limits<double>::quiet_NaN();
      cg = std::numeric_limits<double>::quiet_NaN();
    }
    data.eps0.push_back(eps0);
    for (int k = 0; k < 4; ++k) data.e[k].push_back(e[k]);
    data.c_ground.push_back(cg);
    os << format_double(eps0);
    for (int k = 0; k < 4; ++k) os << "," << format_double(e[k]);
    os << "," << format_double(cg) << "\n";
  }
  data.csv = os.str();
  return data;
}

std::string provenance_text(
    const RunConfig& cfg, const std::string& subcommand, double wall_seconds,
    int workers,
    const std::vector<std::pair<std::string, std::string>>& extra) {
  std::ostringstream os;
  os << "floqsim " << kVersion << "\n";
  os << "subcommand = " << subcommand << "\n";
  os << "workers = " << workers << "\n";
  os << "wall_seconds = " << format_double(wall_seconds) << "\n";
  for (const auto& [k, v] : dump_config(cfg)) os << k << " = " << v << "\n";
  for (const auto& [k, v] : extra) os << k << " = " << v << "\n";
  return os.str();
}

}  // namespace floqsim
