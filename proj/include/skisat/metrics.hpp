#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skisat/dynamics.hpp"
#include "skisat/types.hpp"

namespace skisat {

struct BenchReport {
  std::string instance;
  std::string solver;
  long trials = 0;
  long successes = 0;
  Real success_rate = 0.0;
  std::optional<long> n99;
  std::optional<Real> mean_steps_to_solution;  // over successes only
  std::optional<Real> tts_seconds;
  std::optional<Real> ets_joules;
  std::optional<Real> power_watts;  // assumed power behind ets_joules
  std::string config_json;          // snapshot of the run configuration
  std::vector<RunRecord> records;   // optional; empty when not retained
};

// Repetitions needed for a 99% aggregate solve probability at success rate
// sr: ceil(log 0.01 / log(1 - sr)), with the sr = 1 limit defined as 1.
long n99(Real sr);

// mean(steps over successes) * dt_seconds * n99(success rate). Empty when no
// trial succeeded.
std::optional<Real> tts(const std::vector<RunRecord>& records, Real dt_seconds);

Real ets(Real tts_seconds, Real power_watts);

BenchReport aggregate(const std::vector<RunRecord>& records, const std::string& instance,
                      const std::string& solver, const std::string& config_json,
                      bool keep_records = false);

}  // namespace skisat
