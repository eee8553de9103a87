// skisat: behavioral SAT/MAX-SAT solver with clause-coupled capacitor-voltage
// dynamics, plus a benchmark harness (WalkSAT baseline, brute-force oracle).
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "skisat/bench.hpp"
#include "skisat/io.hpp"
#include "skisat/reference.hpp"

namespace {

// Exit codes: 0 solved/success, 1 unsolved, 2 usage/parse/config errors.
constexpr int kExitSolved = 0;
constexpr int kExitUnsolved = 1;
constexpr int kExitError = 2;

void write_output(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << j.dump(2) << '\n';
}

skisat::RunConfig load_config_or_default(const std::string& path) {
  if (path.empty()) return skisat::RunConfig{};
  return skisat::load_run_config(path);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace skisat;

  CLI::App app{"SKI-SAT behavioral solver and benchmark harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string out_format = "json";
  int jobs = 0;

  // solve: one seeded run on one instance
  auto* solve = app.add_subcommand("solve", "Run the solver once on a DIMACS instance");
  std::string solve_cnf;
  std::uint64_t solve_seed = 1;
  std::string trace_path;
  solve->add_option("cnf", solve_cnf, "DIMACS CNF file")->required();
  solve->add_option("--config", config_path, "run config JSON");
  solve->add_option("--seed", solve_seed, "trial seed");
  solve->add_option("--trace", trace_path, "write per-step CSV trace to this file");
  solve->add_option("--out", out_path, "write the RunRecord JSON here instead of stdout");

  // bench: seeded batch over one or more instances
  auto* bench = app.add_subcommand("bench", "Seeded batch benchmark over instances");
  std::vector<std::string> bench_cnfs;
  long bench_trials = -1;
  std::int64_t bench_seed_base = -1;
  bench->add_option("cnf", bench_cnfs, "DIMACS CNF file(s)")->required();
  bench->add_option("--config", config_path, "run config JSON");
  bench->add_option("--trials", bench_trials, "override trial count");
  bench->add_option("--seed", bench_seed_base, "override seed base");
  bench->add_option("--jobs", jobs, "worker pool size (default: available parallelism)");
  bench->add_option("--out", out_path, "output file (default stdout)");
  bench->add_option("--format", out_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // ablate: three-mode perturbation study
  auto* ablate = app.add_subcommand("ablate", "Run none/gaussian/ski perturbation comparison");
  std::string ablate_cnf;
  long ablate_trials = -1;
  std::int64_t ablate_seed_base = -1;
  ablate->add_option("cnf", ablate_cnf, "DIMACS CNF file")->required();
  ablate->add_option("--config", config_path, "run config JSON");
  ablate->add_option("--trials", ablate_trials, "override trial count");
  ablate->add_option("--seed", ablate_seed_base, "override seed base");
  ablate->add_option("--jobs", jobs, "worker pool size");
  ablate->add_option("--out", out_path, "output file (default stdout)");
  ablate->add_option("--format", out_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // gen: random k-SAT instance
  auto* gen = app.add_subcommand("gen", "Generate a uniform random k-SAT instance");
  int gen_n = 50;
  int gen_m = 300;
  int gen_k = 3;
  std::uint64_t gen_seed = 1;
  gen->add_option("-n,--vars", gen_n, "variable count");
  gen->add_option("-m,--clauses", gen_m, "clause count");
  gen->add_option("-k", gen_k, "literals per clause");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", out_path, "output DIMACS file (default stdout)");

  // oracle: brute force or walksat
  auto* oracle = app.add_subcommand("oracle", "Run the brute-force or WalkSAT oracle");
  std::string oracle_cnf;
  std::string oracle_kind = "brute";
  std::uint64_t oracle_seed = 1;
  oracle->add_option("cnf", oracle_cnf, "DIMACS CNF file")->required();
  oracle->add_option("--kind", oracle_kind, "brute or walksat")
      ->check(CLI::IsMember({"brute", "walksat"}));
  oracle->add_option("--config", config_path, "run config JSON (walksat params)");
  oracle->add_option("--seed", oracle_seed, "walksat seed");
  oracle->add_option("--out", out_path, "output file (default stdout)");

  // config: emit defaults
  auto* config_cmd = app.add_subcommand("config", "Configuration utilities");
  auto* config_init = config_cmd->add_subcommand("init", "Write a config with all defaults");
  config_init->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      RunConfig cfg = load_config_or_default(config_path);
      cfg.dynamics.record_trace = cfg.dynamics.record_trace || !trace_path.empty();
      const Cnf cnf = load_dimacs_file(solve_cnf);
      RunRecord record;
      if (cfg.solver == "walksat") {
        WalkSatParams params = cfg.walksat;
        params.seed = solve_seed;
        record = walksat(cnf, params);
      } else {
        record = run(cnf, cfg.dynamics, cfg.perturbation, solve_seed);
      }
      if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        if (!trace) throw std::runtime_error("cannot write " + trace_path);
        write_trace_csv(record, trace);
      }
      write_output(to_json(record), out_path);
      return record.solved ? kExitSolved : kExitUnsolved;
    }

    if (*bench) {
      RunConfig cfg = load_config_or_default(config_path);
      if (bench_trials > 0) cfg.trials = bench_trials;
      if (bench_seed_base >= 0) cfg.seed_base = static_cast<std::uint64_t>(bench_seed_base);
      cfg.validate();
      nlohmann::json reports = nlohmann::json::array();
      std::ostringstream csv;
      write_report_csv_header(csv);
      for (const std::string& path : bench_cnfs) {
        const Cnf cnf = load_dimacs_file(path);
        const std::string name = std::filesystem::path(path).stem().string();
        const BenchReport report = bench_instance(cnf, name, cfg, jobs);
        reports.push_back(to_json(report));
        write_report_csv_row(report, csv);
      }
      if (out_format == "csv") {
        if (out_path.empty()) {
          std::cout << csv.str();
        } else {
          std::ofstream out(out_path);
          if (!out) throw std::runtime_error("cannot write " + out_path);
          out << csv.str();
        }
      } else {
        write_output(reports.size() == 1 ? reports[0] : reports, out_path);
      }
      return kExitSolved;
    }

    if (*ablate) {
      RunConfig cfg = load_config_or_default(config_path);
      if (ablate_trials > 0) cfg.trials = ablate_trials;
      if (ablate_seed_base >= 0) cfg.seed_base = static_cast<std::uint64_t>(ablate_seed_base);
      cfg.solver = "ski-sat";
      cfg.validate();
      const Cnf cnf = load_dimacs_file(ablate_cnf);
      const std::string name = std::filesystem::path(ablate_cnf).stem().string();
      nlohmann::json reports = nlohmann::json::array();
      std::ostringstream csv;
      write_report_csv_header(csv);
      for (auto mode : {PerturbationMode::none, PerturbationMode::gaussian_noise,
                        PerturbationMode::ski_pulse}) {
        RunConfig mode_cfg = cfg;
        mode_cfg.perturbation.mode = mode;
        BenchReport report = bench_instance(cnf, name, mode_cfg, jobs);
        report.solver = "ski-sat/" + to_string(mode);
        reports.push_back(to_json(report));
        write_report_csv_row(report, csv);
      }
      if (out_format == "csv") {
        if (out_path.empty()) {
          std::cout << csv.str();
        } else {
          std::ofstream out(out_path);
          if (!out) throw std::runtime_error("cannot write " + out_path);
          out << csv.str();
        }
      } else {
        write_output(reports, out_path);
      }
      return kExitSolved;
    }

    if (*gen) {
      const Cnf cnf = generate_random_ksat(gen_n, gen_m, gen_k, gen_seed);
      if (out_path.empty()) {
        serialize_dimacs(cnf, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        serialize_dimacs(cnf, out);
      }
      return kExitSolved;
    }

    if (*oracle) {
      const Cnf cnf = load_dimacs_file(oracle_cnf);
      if (oracle_kind == "brute") {
        const OracleResult result = brute_force(cnf);
        nlohmann::json j{{"min_unsat", result.min_unsat},
                         {"satisfiable", result.satisfiable}};
        std::vector<int> bits(result.witness.data(),
                              result.witness.data() + result.witness.size());
        j["witness"] = bits;
        write_output(j, out_path);
        return result.satisfiable ? kExitSolved : kExitUnsolved;
      }
      RunConfig cfg = load_config_or_default(config_path);
      WalkSatParams params = cfg.walksat;
      params.seed = oracle_seed;
      const RunRecord record = walksat(cnf, params);
      write_output(to_json(record), out_path);
      return record.solved ? kExitSolved : kExitUnsolved;
    }

    if (*config_init) {
      const RunConfig defaults{};
      write_output(to_json(defaults), out_path);
      return kExitSolved;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
