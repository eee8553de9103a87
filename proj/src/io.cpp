#include "skisat/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>

namespace skisat {

using nlohmann::json;

void RunConfig::validate() const {
  dynamics.validate();
  perturbation.validate();
  if (solver != "ski-sat" && solver != "walksat")
    throw std::invalid_argument("solver must be 'ski-sat' or 'walksat'");
  if (solver == "walksat") walksat.validate();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (power_watts && *power_watts <= 0.0)
    throw std::invalid_argument("power_watts must be > 0");
}

json to_json(const DynamicsConfig& cfg) {
  return json{{"delta_v", cfg.delta_v},
              {"dt_seconds", cfg.dt_seconds},
              {"v_init", cfg.v_init},
              {"init_noise_rms", cfg.init_noise_rms},
              {"max_steps", cfg.max_steps},
              {"threshold", cfg.threshold},
              {"record_trace", cfg.record_trace}};
}

json to_json(const PerturbationConfig& cfg) {
  return json{{"mode", to_string(cfg.mode)},
              {"slot_steps", cfg.slot_steps},
              {"density_start", cfg.density_start},
              {"density_end", cfg.density_end},
              {"noise_rms", cfg.noise_rms}};
}

json to_json(const WalkSatParams& params) {
  return json{{"noise_prob", params.noise_prob},
              {"cutoff_flips", params.cutoff_flips},
              {"max_tries", params.max_tries},
              {"seed", params.seed}};
}

json to_json(const RunConfig& cfg) {
  json j{{"dynamics", to_json(cfg.dynamics)},
         {"perturbation", to_json(cfg.perturbation)},
         {"solver", cfg.solver},
         {"walksat", to_json(cfg.walksat)},
         {"trials", cfg.trials},
         {"seed_base", cfg.seed_base}};
  if (cfg.power_watts) j["power_watts"] = *cfg.power_watts;
  return j;
}

json to_json(const RunRecord& record) {
  json j{{"solver", record.solver},
         {"solved", record.solved},
         {"final_best_unsat", record.final_best_unsat},
         {"seed", record.seed},
         {"total_steps", record.total_steps}};
  j["steps_to_solution"] =
      record.steps_to_solution ? json(*record.steps_to_solution) : json(nullptr);
  std::vector<int> bits(record.best_x.data(), record.best_x.data() + record.best_x.size());
  j["best_x"] = bits;
  if (record.unsat_trace) {
    json trace = json::array();
    for (const TracePoint& point : *record.unsat_trace)
      trace.push_back({{"step", point.step}, {"unsat", point.unsat}, {"p", point.p}});
    j["unsat_trace"] = std::move(trace);
  }
  return j;
}

json to_json(const BenchReport& report) {
  json j{{"instance", report.instance},
         {"solver", report.solver},
         {"trials", report.trials},
         {"successes", report.successes},
         {"success_rate", report.success_rate}};
  j["n99"] = report.n99 ? json(*report.n99) : json(nullptr);
  j["mean_steps_to_solution"] =
      report.mean_steps_to_solution ? json(*report.mean_steps_to_solution) : json(nullptr);
  j["tts_seconds"] = report.tts_seconds ? json(*report.tts_seconds) : json(nullptr);
  j["ets_joules"] = report.ets_joules ? json(*report.ets_joules) : json(nullptr);
  j["power_watts"] = report.power_watts ? json(*report.power_watts) : json(nullptr);
  if (!report.config_json.empty()) j["config"] = json::parse(report.config_json);
  if (!report.records.empty()) {
    json records = json::array();
    for (const RunRecord& record : report.records) records.push_back(to_json(record));
    j["records"] = std::move(records);
  }
  return j;
}

DynamicsConfig dynamics_config_from_json(const json& j) {
  DynamicsConfig cfg;
  cfg.delta_v = j.value("delta_v", cfg.delta_v);
  cfg.dt_seconds = j.value("dt_seconds", cfg.dt_seconds);
  cfg.v_init = j.value("v_init", cfg.v_init);
  cfg.init_noise_rms = j.value("init_noise_rms", cfg.init_noise_rms);
  cfg.max_steps = j.value("max_steps", cfg.max_steps);
  cfg.threshold = j.value("threshold", cfg.threshold);
  cfg.record_trace = j.value("record_trace", cfg.record_trace);
  cfg.validate();
  return cfg;
}

PerturbationConfig perturbation_config_from_json(const json& j) {
  PerturbationConfig cfg;
  if (j.contains("mode")) cfg.mode = perturbation_mode_from_string(j.at("mode").get<std::string>());
  cfg.slot_steps = j.value("slot_steps", cfg.slot_steps);
  cfg.density_start = j.value("density_start", cfg.density_start);
  cfg.density_end = j.value("density_end", cfg.density_end);
  cfg.noise_rms = j.value("noise_rms", cfg.noise_rms);
  cfg.validate();
  return cfg;
}

WalkSatParams walksat_params_from_json(const json& j) {
  WalkSatParams params;
  params.noise_prob = j.value("noise_prob", params.noise_prob);
  params.cutoff_flips = j.value("cutoff_flips", params.cutoff_flips);
  params.max_tries = j.value("max_tries", params.max_tries);
  params.seed = j.value("seed", params.seed);
  params.validate();
  return params;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig cfg;
  if (j.contains("dynamics")) cfg.dynamics = dynamics_config_from_json(j.at("dynamics"));
  if (j.contains("perturbation"))
    cfg.perturbation = perturbation_config_from_json(j.at("perturbation"));
  cfg.solver = j.value("solver", cfg.solver);
  if (j.contains("walksat")) cfg.walksat = walksat_params_from_json(j.at("walksat"));
  cfg.trials = j.value("trials", cfg.trials);
  cfg.seed_base = j.value("seed_base", cfg.seed_base);
  if (j.contains("power_watts") && !j.at("power_watts").is_null())
    cfg.power_watts = j.at("power_watts").get<Real>();
  cfg.validate();
  return cfg;
}

RunRecord run_record_from_json(const json& j) {
  RunRecord record;
  record.solver = j.value("solver", record.solver);
  record.solved = j.at("solved").get<bool>();
  record.final_best_unsat = j.at("final_best_unsat").get<int>();
  record.seed = j.at("seed").get<std::uint64_t>();
  record.total_steps = j.at("total_steps").get<long>();
  if (!j.at("steps_to_solution").is_null())
    record.steps_to_solution = j.at("steps_to_solution").get<long>();
  const auto bits = j.at("best_x").get<std::vector<int>>();
  record.best_x.resize(static_cast<Eigen::Index>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) record.best_x[static_cast<Eigen::Index>(i)] = bits[i];
  if (j.contains("unsat_trace")) {
    record.unsat_trace.emplace();
    for (const json& point : j.at("unsat_trace"))
      record.unsat_trace->push_back({point.at("step").get<long>(), point.at("unsat").get<int>(),
                                     point.at("p").get<bool>()});
  }
  return record;
}

BenchReport bench_report_from_json(const json& j) {
  BenchReport report;
  report.instance = j.at("instance").get<std::string>();
  report.solver = j.at("solver").get<std::string>();
  report.trials = j.at("trials").get<long>();
  report.successes = j.at("successes").get<long>();
  report.success_rate = j.at("success_rate").get<Real>();
  if (!j.at("n99").is_null()) report.n99 = j.at("n99").get<long>();
  if (!j.at("mean_steps_to_solution").is_null())
    report.mean_steps_to_solution = j.at("mean_steps_to_solution").get<Real>();
  if (!j.at("tts_seconds").is_null()) report.tts_seconds = j.at("tts_seconds").get<Real>();
  if (!j.at("ets_joules").is_null()) report.ets_joules = j.at("ets_joules").get<Real>();
  if (!j.at("power_watts").is_null()) report.power_watts = j.at("power_watts").get<Real>();
  if (j.contains("config")) report.config_json = j.at("config").dump();
  if (j.contains("records"))
    for (const json& record : j.at("records")) report.records.push_back(run_record_from_json(record));
  return report;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("config " + path + ": " + e.what());
  }
  return run_config_from_json(j);
}

void save_run_config(const RunConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file " + path);
  out << to_json(cfg).dump(2) << '\n';
}

void write_trace_csv(const RunRecord& record, std::ostream& out) {
  out << "step,unsat_count,p\n";
  if (!record.unsat_trace) return;
  for (const TracePoint& point : *record.unsat_trace)
    out << point.step << ',' << point.unsat << ',' << (point.p ? 1 : 0) << '\n';
}

void write_report_csv_header(std::ostream& out) {
  out << "instance,solver,trials,sr,n99,tts_s,ets_j\n";
}

void write_report_csv_row(const BenchReport& report, std::ostream& out) {
  out << report.instance << ',' << report.solver << ',' << report.trials << ','
      << report.success_rate << ',';
  if (report.n99) out << *report.n99;
  out << ',';
  if (report.tts_seconds) out << *report.tts_seconds;
  out << ',';
  if (report.ets_joules) out << *report.ets_joules;
  out << '\n';
}

}  // namespace skisat
