#pragma once

#include <nlohmann/json_fwd.hpp>
#include <iosfwd>
#include <string>

#include "skisat/dynamics.hpp"
#include "skisat/metrics.hpp"
#include "skisat/perturb.hpp"
#include "skisat/reference.hpp"

namespace skisat {

// Declarative run configuration: dynamics + perturbation + trial plan.
struct RunConfig {
  DynamicsConfig dynamics;
  PerturbationConfig perturbation;
  std::string solver = "ski-sat";  // "ski-sat" or "walksat"
  WalkSatParams walksat;
  long trials = 1000;
  std::uint64_t seed_base = 1;
  std::optional<Real> power_watts;  // for EtS; user-supplied

  void validate() const;
};

nlohmann::json to_json(const DynamicsConfig& cfg);
nlohmann::json to_json(const PerturbationConfig& cfg);
nlohmann::json to_json(const WalkSatParams& params);
nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const RunRecord& record);
nlohmann::json to_json(const BenchReport& report);

DynamicsConfig dynamics_config_from_json(const nlohmann::json& j);
PerturbationConfig perturbation_config_from_json(const nlohmann::json& j);
WalkSatParams walksat_params_from_json(const nlohmann::json& j);
RunConfig run_config_from_json(const nlohmann::json& j);
RunRecord run_record_from_json(const nlohmann::json& j);
BenchReport bench_report_from_json(const nlohmann::json& j);

RunConfig load_run_config(const std::string& path);
void save_run_config(const RunConfig& cfg, const std::string& path);

// CSV trace: one line per step (step, unsat_count, P).
void write_trace_csv(const RunRecord& record, std::ostream& out);

// Table II-style comparison row.
void write_report_csv_header(std::ostream& out);
void write_report_csv_row(const BenchReport& report, std::ostream& out);

}  // namespace skisat
