#include "skisat/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace skisat {

long n99(Real sr) {
  if (sr <= 0.0 || sr > 1.0) throw std::invalid_argument("success rate must lie in (0, 1]");
  if (sr == 1.0) return 1;  // limit case; the formula is singular here
  return static_cast<long>(std::ceil(std::log(0.01) / std::log(1.0 - sr)));
}

std::optional<Real> tts(const std::vector<RunRecord>& records, Real dt_seconds) {
  if (records.empty()) throw std::invalid_argument("no records");
  long successes = 0;
  Real step_sum = 0.0;
  for (const RunRecord& r : records) {
    if (!r.solved) continue;
    successes++;
    step_sum += static_cast<Real>(*r.steps_to_solution);
  }
  if (successes == 0) return std::nullopt;
  const Real sr = static_cast<Real>(successes) / static_cast<Real>(records.size());
  const Real mean_steps = step_sum / static_cast<Real>(successes);
  return mean_steps * dt_seconds * static_cast<Real>(n99(sr));
}

Real ets(Real tts_seconds, Real power_watts) {
  if (tts_seconds <= 0.0 || power_watts <= 0.0)
    throw std::invalid_argument("tts and power must be > 0");
  return tts_seconds * power_watts;
}

BenchReport aggregate(const std::vector<RunRecord>& records, const std::string& instance,
                      const std::string& solver, const std::string& config_json,
                      bool keep_records) {
  if (records.empty()) throw std::invalid_argument("no records to aggregate");
  BenchReport report;
  report.instance = instance;
  report.solver = solver;
  report.config_json = config_json;
  report.trials = static_cast<long>(records.size());
  Real step_sum = 0.0;
  for (const RunRecord& r : records) {
    if (!r.solved) continue;
    report.successes++;
    step_sum += static_cast<Real>(*r.steps_to_solution);
  }
  report.success_rate = static_cast<Real>(report.successes) / static_cast<Real>(report.trials);
  if (report.successes > 0) {
    report.n99 = n99(report.success_rate);
    report.mean_steps_to_solution = step_sum / static_cast<Real>(report.successes);
  }
  if (keep_records) report.records = records;
  return report;
}

}  // namespace skisat
