#pragma once

#include <string>
#include <vector>

#include "skisat/io.hpp"
#include "skisat/metrics.hpp"

namespace skisat {

// Runs cfg.trials seeded trials (seeds seed_base .. seed_base + trials - 1)
// of the configured solver across a worker pool. Records come back indexed
// by trial, so the aggregate is independent of completion order and of the
// pool size. jobs <= 0 selects hardware concurrency. trial_seconds, when
// non-null, receives measured per-trial wall time (used for the baseline's
// TtS accounting; never part of the deterministic record).
std::vector<RunRecord> run_trials(const Cnf& cnf, const RunConfig& cfg, int jobs = 0,
                                  std::vector<double>* trial_seconds = nullptr);

BenchReport bench_instance(const Cnf& cnf, const std::string& instance_name,
                           const RunConfig& cfg, int jobs = 0, bool keep_records = false);

}  // namespace skisat
