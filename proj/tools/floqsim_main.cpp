#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floqsim/errors.hpp"
#include "floqsim/report.hpp"
#include "floqsim/svg.hpp"

namespace fs = std::filesystem;
using namespace floqsim;

namespace {

struct CommonOpts {
  std::optional<std::string> config;
  std::vector<std::string> sets;
  std::string out = "out";
  int workers = 0;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config, "configuration file (key = value)");
  cmd->add_option("--set", opts.sets, "override, key=value (repeatable)")
      ->take_all();
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--workers", opts.workers,
                  "worker threads (default: FLOQSIM_WORKERS or hardware)");
  cmd->add_option("--format", opts.format, "csv or csv+plot")
      ->check(CLI::IsMember({"csv", "csv+plot"}));
}

std::string param_summary(const RunConfig& cfg) {
  const PointConfig& pt = cfg.point;
  std::ostringstream os;
  os << "A=" << pt.drive.amplitude << " eps0=" << pt.model.eps0
     << " xi=" << pt.bath.xi << " J=" << pt.model.j;
  return os.str();
}

int finish(const RunConfig& cfg, const CommonOpts& opts,
           const std::string& subcommand, double wall, int workers,
           bool partial_failure,
           const std::vector<std::pair<std::string, std::string>>& extra) {
  write_text_file((fs::path(opts.out) / "provenance.txt").string(),
                  provenance_text(cfg, subcommand, wall, workers, extra));
  return partial_failure ? 3 : 0;
}

int cmd_point(const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = resolve_config(opts.config, opts.sets);
  if (!cfg.axes.empty())
    throw floqsim::ConfigError("point: config must not define sweep axes");
  fs::create_directories(opts.out);

  SweepResult result;
  result.rows.push_back(SweepRow{});
  result.rows[0].rec = run_point(cfg.point);
  const PointRecord& r = result.rows[0].rec;
  write_text_file((fs::path(opts.out) / "steady_concurrence.csv").string(),
                  csv_steady(result));
  if (r.ok()) {
    std::cout << "c_inf = " << r.c_inf << "\n"
              << "populations = " << r.populations[0] << " "
              << r.populations[1] << " " << r.populations[2] << " "
              << r.populations[3] << "\n";
  } else {
    std::cout << "error: " << r.error << "\n";
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(cfg, opts, "point", wall, 1, !r.ok(), {});
}

int cmd_sweep(const CommonOpts& opts) {
  RunConfig cfg = resolve_config(opts.config, opts.sets);
  if (cfg.axes.empty())
    throw floqsim::ConfigError("sweep: config must define at least one sweep axis");
  fs::create_directories(opts.out);

  const int workers = opts.workers > 0 ? opts.workers : default_workers();
  const SweepResult result = run_sweep(cfg, workers);
  write_text_file((fs::path(opts.out) / "steady_concurrence.csv").string(),
                  csv_steady(result));

  if (opts.format == "csv+plot") {
    if (cfg.axes.size() == 2) {
      HeatmapSpec spec;
      spec.title = "steady concurrence (" + param_summary(cfg) + ")";
      spec.xlabel = cfg.axes[0].name;
      spec.ylabel = cfg.axes[1].name;
      for (int i = 0; i < cfg.axes[0].steps; ++i)
        spec.xs.push_back(cfg.axes[0].value_at(i));
      for (int j = 0; j < cfg.axes[1].steps; ++j)
        spec.ys.push_back(cfg.axes[1].value_at(j));
      for (const SweepRow& row : result.rows)
        spec.values.push_back(row.rec.c_inf);
      write_text_file((fs::path(opts.out) / "steady_concurrence.svg").string(),
                      render_heatmap_svg(spec));
    } else {
      LinePlotSpec spec;
      spec.title = "steady concurrence (" + param_summary(cfg) + ")";
      spec.xlabel = cfg.axes[0].name;
      spec.ylabel = "C";
      LineSeries s;
      s.name = "c_inf";
      for (const SweepRow& row : result.rows) {
        s.x.push_back(row.coords[0]);
        s.y.push_back(row.rec.c_inf);
      }
      spec.series.push_back(s);
      write_text_file((fs::path(opts.out) / "steady_concurrence.svg").string(),
                      render_lines_svg(spec));
    }
  }

  int failed = 0;
  for (const SweepRow& row : result.rows)
    if (!row.rec.ok()) ++failed;
  std::cout << result.rows.size() << " points, " << failed << " failed, "
            << result.wall_seconds << " s\n";
  return finish(cfg, opts, "sweep", result.wall_seconds, workers, failed > 0,
                {{"grid_points", std::to_string(result.rows.size())},
                 {"failed_points", std::to_string(failed)}});
}

int cmd_rates(const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = resolve_config(opts.config, opts.sets);
  fs::create_directories(opts.out);
  const RatesReportData data = rates_report(cfg);
  write_text_file((fs::path(opts.out) / "rates_vs_xi.csv").string(), data.csv);

  if (opts.format == "csv+plot") {
    LinePlotSpec spec;
    spec.title = "transition rates vs xi (" + param_summary(cfg) + ")";
    spec.xlabel = "xi";
    spec.ylabel = "rate";
    spec.logy = true;
    static const char* basis_name[4] = {"pert", "fgr", "eff", "floq"};
    static const char* pair_name[5] = {"12", "02", "23", "01", "13"};
    for (int b : {1, 3})  // exact golden rule and Floquet columns
      for (int p = 0; p < 3; ++p) {
        LineSeries s;
        s.name = std::string(basis_name[b]) + "_" + pair_name[p];
        s.x = data.xi;
        s.y = data.col[b][p];
        spec.series.push_back(s);
      }
    write_text_file((fs::path(opts.out) / "rates_vs_xi.svg").string(),
                    render_lines_svg(spec));
  }
  std::cout << "xi_c (floquet) = " << data.xi_c[3] << "\n";
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(cfg, opts, "rates", wall, 1, false,
                {{"xi_c.perturbative", format_double(data.xi_c[0])},
                 {"xi_c.fgr", format_double(data.xi_c[1])},
                 {"xi_c.effective", format_double(data.xi_c[2])},
                 {"xi_c.floquet", format_double(data.xi_c[3])}});
}

int cmd_trace(const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = resolve_config(opts.config, opts.sets);
  fs::create_directories(opts.out);
  const TraceReportData data = trace_report(cfg);
  write_text_file((fs::path(opts.out) / "populations_trace.csv").string(),
                  data.csv);
  if (opts.format == "csv+plot") {
    LinePlotSpec spec;
    spec.title = "populations (" + param_summary(cfg) + ")";
    spec.xlabel = "t/tau";
    spec.ylabel = "P";
    spec.logx = cfg.thin == "log";
    for (int k = 0; k < 4; ++k) {
      LineSeries s;
      s.name = "p" + std::to_string(k);
      s.x = data.t;
      s.y = data.p[k];
      spec.series.push_back(s);
    }
    LineSeries s;
    s.name = "C";
    s.x = data.t;
    s.y = data.c;
    spec.series.push_back(s);
    write_text_file((fs::path(opts.out) / "populations_trace.svg").string(),
                    render_lines_svg(spec));
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(cfg, opts, "trace", wall, 1, false, {});
}

int cmd_spectrum(const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = resolve_config(opts.config, opts.sets);
  fs::create_directories(opts.out);
  const SpectrumReportData data = spectrum_report(cfg);
  write_text_file((fs::path(opts.out) / "spectrum.csv").string(), data.csv);
  if (opts.format == "csv+plot") {
    LinePlotSpec spec;
    spec.title = "spectrum (J=" + std::to_string(cfg.point.model.j) + ")";
    spec.xlabel = "eps0";
    spec.ylabel = "E";
    for (int k = 0; k < 4; ++k) {
      LineSeries s;
      s.name = "e" + std::to_string(k);
      s.x = data.eps0;
      s.y = data.e[k];
      spec.series.push_back(s);
    }
    LineSeries s;
    s.name = "C(ground)";
    s.x = data.eps0;
    s.y = data.c_ground;
    spec.series.push_back(s);
    write_text_file((fs::path(opts.out) / "spectrum.svg").string(),
                    render_lines_svg(spec));
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return finish(cfg, opts, "spectrum", wall, 1, false, {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"driven dissipative two-qubit steady-state simulator"};
  app.require_subcommand(1);

  CommonOpts opts[5];
  CLI::App* sub[5];
  const char* names[5] = {"point", "sweep", "rates", "trace", "spectrum"};
  const char* descr[5] = {
      "steady state at a single parameter point",
      "steady state over a 1d/2d parameter grid",
      "transition rates as a function of xi",
      "stroboscopic populations and concurrence trace",
      "static spectrum versus detuning"};
  for (int i = 0; i < 5; ++i) {
    sub[i] = app.add_subcommand(names[i], descr[i]);
    add_common(sub[i], opts[i]);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (int i = 0; i < 5; ++i)
      if (sub[i]->parsed()) {
        switch (i) {
          case 0: return cmd_point(opts[i]);
          case 1: return cmd_sweep(opts[i]);
          case 2: return cmd_rates(opts[i]);
          case 3: return cmd_trace(opts[i]);
          case 4: return cmd_spectrum(opts[i]);
        }
      }
  } catch (const floqsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const floqsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
