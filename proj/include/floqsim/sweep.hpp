#pragma once

#include <string>
#include <vector>

#include "floqsim/config.hpp"
#include "floqsim/pipeline.hpp"

namespace floqsim {

/// One grid point of a sweep: coordinate values (axis order of the
/// config, unused entries zero) plus the evaluated record.
struct SweepRow {
  std::array<double, 2> coords{};
  PointRecord rec;
};

/// Complete grid in deterministic order: axis 1 outer, axis 2 inner.
struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<SweepRow> rows;
  double wall_seconds = 0.0;
  int workers = 1;
};

/// Evaluates every grid point, work-stealing across `workers` threads.
/// Output order does not depend on scheduling; per-point failures are
/// captured in the row records.
SweepResult run_sweep(const RunConfig& cfg, int workers);

/// Default worker count: FLOQSIM_WORKERS when set, else the hardware
/// concurrency.
int default_workers();

}  // namespace floqsim
