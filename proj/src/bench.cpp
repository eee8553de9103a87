#include "skisat/bench.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <thread>

#include "skisat/reference.hpp"

namespace skisat {

std::vector<RunRecord> run_trials(const Cnf& cnf, const RunConfig& cfg, int jobs,
                                  std::vector<double>* trial_seconds) {
  cfg.validate();
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (static_cast<long>(jobs) > cfg.trials) jobs = static_cast<int>(cfg.trials);

  std::vector<RunRecord> records(cfg.trials);
  if (trial_seconds) trial_seconds->assign(cfg.trials, 0.0);
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      const long trial = next.fetch_add(1);
      if (trial >= cfg.trials) return;
      const std::uint64_t seed = cfg.seed_base + static_cast<std::uint64_t>(trial);
      const auto started = std::chrono::steady_clock::now();
      if (cfg.solver == "walksat") {
        WalkSatParams params = cfg.walksat;
        params.seed = seed;
        records[trial] = walksat(cnf, params);
      } else {
        records[trial] = run(cnf, cfg.dynamics, cfg.perturbation, seed);
      }
      if (trial_seconds)
        (*trial_seconds)[trial] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return records;
}

BenchReport bench_instance(const Cnf& cnf, const std::string& instance_name,
                           const RunConfig& cfg, int jobs, bool keep_records) {
  std::vector<double> trial_seconds;
  const std::vector<RunRecord> records = run_trials(cnf, cfg, jobs, &trial_seconds);
  BenchReport report =
      aggregate(records, instance_name, cfg.solver, to_json(cfg).dump(), keep_records);
  if (cfg.solver == "ski-sat") {
    report.tts_seconds = tts(records, cfg.dynamics.dt_seconds);
  } else if (report.successes > 0) {
    // Baseline accounting: measured mean wall time per try times the
    // repetitions needed for 99% aggregate solve probability.
    double total = 0.0;
    for (double s : trial_seconds) total += s;
    const double mean_try = total / static_cast<double>(records.size());
    report.tts_seconds = mean_try * static_cast<double>(n99(report.success_rate));
  }
  if (report.tts_seconds && cfg.power_watts) {
    report.power_watts = cfg.power_watts;
    report.ets_joules = ets(*report.tts_seconds, *cfg.power_watts);
  }
  return report;
}

}  // namespace skisat
