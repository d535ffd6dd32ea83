#include "floqsim/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace floqsim {

int default_workers() {
  if (const char* env = std::getenv("FLOQSIM_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SweepResult run_sweep(const RunConfig& cfg, int workers) {
  const auto start = std::chrono::steady_clock::now();

  SweepResult result;
  result.axes = cfg.axes;
  result.workers = std::max(1, workers);

  // Materialize the grid up front so rows land in deterministic order.
  std::vector<PointConfig> points;
  if (cfg.axes.empty()) {
    result.rows.push_back(SweepRow{});
    points.push_back(cfg.point);
  } else if (cfg.axes.size() == 1) {
    const SweepAxis& ax = cfg.axes[0];
    for (int i = 0; i < ax.steps; ++i) {
      SweepRow row;
      row.coords[0] = ax.value_at(i);
      result.rows.push_back(row);
      PointConfig pc = cfg.point;
      set_axis_value(pc, ax.name, row.coords[0]);
      points.push_back(pc);
    }
  } else {
    const SweepAxis& ax1 = cfg.axes[0];
    const SweepAxis& ax2 = cfg.axes[1];
    for (int i = 0; i < ax1.steps; ++i)
      for (int j = 0; j < ax2.steps; ++j) {
        SweepRow row;
        row.coords[0] = ax1.value_at(i);
        row.coords[1] = ax2.value_at(j);
        result.rows.push_back(row);
        PointConfig pc = cfg.point;
        set_axis_value(pc, ax1.name, row.coords[0]);
        set_axis_value(pc, ax2.name, row.coords[1]);
        points.push_back(pc);
      }
  }

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      result.rows[i].rec = run_point(points[i]);
    }
  };

  const int nthreads =
      std::min<int>(result.workers, static_cast<int>(points.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace floqsim
