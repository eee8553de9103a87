#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "skisat/bench.hpp"
#include "skisat/io.hpp"
#include "test_helpers.hpp"

using namespace skisat;

TEST_CASE("RunRecord JSON round-trip") {
  const Cnf cnf = generate_random_ksat(12, 50, 3, 3);
  DynamicsConfig cfg;
  cfg.max_steps = 3000;
  cfg.record_trace = true;
  PerturbationConfig perturb;
  const RunRecord record = run(cnf, cfg, perturb, 77);
  const RunRecord back = run_record_from_json(to_json(record));
  CHECK(back.solved == record.solved);
  CHECK(back.steps_to_solution == record.steps_to_solution);
  CHECK(back.final_best_unsat == record.final_best_unsat);
  CHECK(back.best_x == record.best_x);
  CHECK(back.seed == record.seed);
  CHECK(back.unsat_trace->size() == record.unsat_trace->size());
  CHECK(to_json(back).dump() == to_json(record).dump());
}

TEST_CASE("RunConfig JSON round-trip and validation") {
  RunConfig cfg;
  cfg.trials = 42;
  cfg.seed_base = 9;
  cfg.power_watts = 0.02;
  cfg.perturbation.density_start = 0.4;
  const RunConfig back = run_config_from_json(to_json(cfg));
  CHECK(back.trials == 42);
  CHECK(back.seed_base == 9);
  CHECK(*back.power_watts == doctest::Approx(0.02));
  CHECK(back.perturbation.density_start == doctest::Approx(0.4));

  nlohmann::json bad = to_json(cfg);
  bad["solver"] = "cdcl";
  CHECK_THROWS(run_config_from_json(bad));
}

TEST_CASE("BenchReport JSON round-trips losslessly") {
  const Cnf cnf = generate_random_ksat(10, 42, 3, 8);
  RunConfig cfg;
  cfg.trials = 20;
  cfg.dynamics.max_steps = 2000;
  const BenchReport report = bench_instance(cnf, "test-instance", cfg, 1);
  const BenchReport back = bench_report_from_json(to_json(report));
  CHECK(to_json(back).dump() == to_json(report).dump());
}

TEST_CASE("trace CSV shape") {
  const Cnf cnf = parse_dimacs("p cnf 1 1\n1 0\n");
  DynamicsConfig cfg;
  cfg.max_steps = 100;
  cfg.record_trace = true;
  PerturbationConfig perturb;
  const RunRecord record = run(cnf, cfg, perturb, 1);
  std::ostringstream out;
  write_trace_csv(record, out);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "step,unsat_count,p");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) rows++;
  CHECK(rows == static_cast<int>(record.unsat_trace->size()));
}

TEST_CASE("report CSV columns") {
  BenchReport report;
  report.instance = "inst";
  report.solver = "ski-sat";
  report.trials = 10;
  report.successes = 5;
  report.success_rate = 0.5;
  report.n99 = 7;
  report.tts_seconds = 140e-9;
  std::ostringstream out;
  write_report_csv_header(out);
  write_report_csv_row(report, out);
  CHECK(out.str().find("instance,solver,trials,sr,n99,tts_s,ets_j") == 0);
  CHECK(out.str().find("inst,ski-sat,10,0.5,7,1.4e-07,") != std::string::npos);
}

TEST_CASE("bench run is reproducible and pool-size independent") {
  const Cnf cnf = generate_random_ksat(16, 70, 3, 12);
  RunConfig cfg;
  cfg.trials = 16;
  cfg.dynamics.max_steps = 3000;
  const auto a = run_trials(cnf, cfg, 1);
  const auto b = run_trials(cnf, cfg, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
}
