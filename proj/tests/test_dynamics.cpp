#include <doctest.h>

#include "skisat/dynamics.hpp"
#include "skisat/reference.hpp"
#include "test_helpers.hpp"

using namespace skisat;
using skisat::testing::make_assignment;
using skisat::testing::random_assignment;
using skisat::testing::worked_example;

TEST_CASE("clause_outputs reproduces the k=3 truth table bit for bit") {
  // Rows: {P, L1, L2, L3} -> {T, Z1, Z2, Z3}
  struct Row {
    bool p;
    std::vector<std::uint8_t> l;
    bool t;
    std::vector<std::uint8_t> z;
  };
  const Row rows[] = {
      {false, {0, 0, 0}, false, {1, 1, 1}},
      {false, {0, 0, 1}, true, {0, 0, 1}},
      {false, {0, 1, 0}, true, {0, 1, 0}},
      {false, {0, 1, 1}, true, {0, 0, 0}},
      {false, {1, 0, 0}, true, {1, 0, 0}},
      {false, {1, 0, 1}, true, {0, 0, 0}},
      {false, {1, 1, 0}, true, {0, 0, 0}},
      {false, {1, 1, 1}, true, {0, 0, 0}},
      {true, {0, 0, 0}, false, {1, 1, 1}},
      {true, {0, 0, 1}, true, {0, 0, 0}},
      {true, {0, 1, 0}, true, {0, 0, 0}},
      {true, {0, 1, 1}, true, {0, 0, 0}},
      {true, {1, 0, 0}, true, {0, 0, 0}},
      {true, {1, 0, 1}, true, {0, 0, 0}},
      {true, {1, 1, 0}, true, {0, 0, 0}},
      {true, {1, 1, 1}, true, {0, 0, 0}},
  };
  for (const Row& row : rows) {
    const ClauseOutputs out = clause_outputs(row.l, row.p);
    CHECK(out.t == row.t);
    CHECK(out.z == row.z);
  }
}

TEST_CASE("clause_outputs generalizes to other k") {
  CHECK(clause_outputs({0}, false).z == std::vector<std::uint8_t>{1});
  CHECK(clause_outputs({1}, false).z == std::vector<std::uint8_t>{1});  // sole satisfier
  CHECK(clause_outputs({1}, true).z == std::vector<std::uint8_t>{0});
  const ClauseOutputs k4 = clause_outputs({0, 1, 0, 0}, false);
  CHECK(k4.t);
  CHECK(k4.z == std::vector<std::uint8_t>{0, 1, 0, 0});
}

TEST_CASE("node_currents: worked example") {
  const Cnf cnf = worked_example();
  // Clause 1 unsatisfied: all three of its variables pushed toward
  // satisfying it.
  IntVector expect(6);
  expect << 1, -1, 0, 0, 1, 0;
  CHECK(node_currents(cnf, make_assignment({0, 1, 0, 0, 0, 0}), false) == expect);

  // Fully satisfied; only clause 3's sole satisfier ~X6 holds a maintain
  // current.
  expect << 0, 0, 0, 0, 0, -1;
  CHECK(node_currents(cnf, make_assignment({1, 0, 0, 0, 1, 0}), false) == expect);

  // Same state under perturbation: satisfied clauses masked.
  expect.setZero();
  CHECK(node_currents(cnf, make_assignment({1, 0, 0, 0, 1, 0}), true) == expect);
}

namespace {
// Gradient oracle: -(H(x with X_i = 1) - H(x with X_i = 0)).
int neg_discrete_gradient(const Cnf& cnf, const Assignment& x, int i) {
  Assignment hi = x;
  Assignment lo = x;
  hi[i] = 1;
  lo[i] = 0;
  return -(unsat_count(cnf, hi) - unsat_count(cnf, lo));
}
}  // namespace

TEST_CASE("gradient identity: currents equal the negated Hamming gradient") {
  Rng rng(11);
  SUBCASE("exhaustive for small N") {
    for (int instance = 0; instance < 5; ++instance) {
      const int n = 4 + instance;
      const Cnf cnf = generate_random_ksat(n, 4 * n, 3, 100 + instance);
      for (int bits = 0; bits < (1 << n); ++bits) {
        Assignment x(n);
        for (int i = 0; i < n; ++i) x[i] = (bits >> i) & 1;
        const IntVector currents = node_currents(cnf, x, false);
        for (int i = 0; i < n; ++i) CHECK(currents[i] == neg_discrete_gradient(cnf, x, i));
      }
    }
  }
  SUBCASE("random pairs at N = 50") {
    const Cnf cnf = generate_random_ksat(50, 218, 3, 42);
    for (int trial = 0; trial < 1000; ++trial) {
      const Assignment x = random_assignment(50, rng);
      const IntVector currents = node_currents(cnf, x, false);
      for (int i = 0; i < 50; ++i) CHECK(currents[i] == neg_discrete_gradient(cnf, x, i));
    }
  }
}

TEST_CASE("make_break: worked example") {
  const Cnf cnf = worked_example();
  CHECK(make_break(cnf, make_assignment({0, 1, 0, 0, 0, 0}), 2) == std::pair{1, 0});
  CHECK(make_break(cnf, make_assignment({1, 0, 0, 0, 1, 0}), 6) == std::pair{0, 1});
  // Variable with no occurrences.
  const Cnf sparse = parse_dimacs("p cnf 3 1\n1 2 0\n");
  CHECK(make_break(sparse, make_assignment({0, 1, 0}), 3) == std::pair{0, 0});
  CHECK_THROWS_AS(make_break(sparse, make_assignment({0, 1, 0}), 4), CnfError);
}

TEST_CASE("make/break identity against node currents") {
  Rng rng(13);
  const Cnf cnf = generate_random_ksat(30, 130, 3, 77);
  for (int trial = 0; trial < 200; ++trial) {
    const Assignment x = random_assignment(30, rng);
    const IntVector greedy = node_currents(cnf, x, false);
    const IntVector perturbed = node_currents(cnf, x, true);
    for (int i = 0; i < 30; ++i) {
      const auto [make, brk] = make_break(cnf, x, i + 1);
      // Current signed toward flipping X_i.
      const int toward_flip = x[i] ? -greedy[i] : greedy[i];
      const int toward_flip_p = x[i] ? -perturbed[i] : perturbed[i];
      CHECK(toward_flip == make - brk);
      CHECK(toward_flip_p == make);
    }
  }
}

TEST_CASE("step: voltage arithmetic, clamp, and threshold flip") {
  const Cnf cnf = parse_dimacs("p cnf 1 1\n1 0\n");
  DynamicsConfig cfg;

  SUBCASE("increment by delta_v per unit current") {
    SolverState s;
    s.v = Vector::Constant(1, 0.5);
    s.x = make_assignment({1});
    s.best_unsat = 0;
    s.best_x = s.x;
    step(s, cnf, false, cfg);  // positive unit clause satisfied by its sole literal: +1 maintain
    CHECK(s.v[0] == doctest::Approx(0.5 + 1.0 / 600.0));
    CHECK(s.x[0] == 1);
    CHECK(s.step == 1);
  }
  SUBCASE("rail clamp") {
    SolverState s;
    s.v = Vector::Constant(1, 1.0);
    s.x = make_assignment({1});
    s.best_unsat = 0;
    s.best_x = s.x;
    step(s, cnf, false, cfg);
    CHECK(s.v[0] == 1.0);
  }
  SUBCASE("downward crossing flips x") {
    const Cnf neg = parse_dimacs("p cnf 1 1\n-1 0\n");
    SolverState s;
    s.v = Vector::Constant(1, 0.5004);
    s.x = make_assignment({1});
    s.best_unsat = 1;
    s.best_x = s.x;
    step(s, neg, false, cfg);  // unsatisfied ~X1 drives current -1
    CHECK(s.v[0] == doctest::Approx(0.5004 - 1.0 / 600.0));
    CHECK(s.x[0] == 0);
    CHECK(s.best_unsat == 0);
  }
  SUBCASE("threshold tie maps to 1") {
    SolverState s;
    s.v = Vector::Constant(1, 0.5);
    s.x = (s.v.array() >= cfg.threshold).cast<int>();
    CHECK(s.x[0] == 1);
  }
}

TEST_CASE("run: single positive unit clause solves quickly") {
  const Cnf cnf = parse_dimacs("p cnf 1 1\n1 0\n");
  DynamicsConfig cfg;
  cfg.max_steps = 1000;
  PerturbationConfig perturb;
  const RunRecord record = run(cnf, cfg, perturb, 3);
  CHECK(record.solved);
  CHECK(*record.steps_to_solution < 500);
  CHECK(record.best_x == make_assignment({1}));
}

TEST_CASE("run: determinism per seed") {
  const Cnf cnf = generate_random_ksat(20, 91, 3, 5);
  DynamicsConfig cfg;
  cfg.max_steps = 5000;
  cfg.record_trace = true;
  PerturbationConfig perturb;
  const RunRecord a = run(cnf, cfg, perturb, 17);
  const RunRecord b = run(cnf, cfg, perturb, 17);
  CHECK(a.solved == b.solved);
  CHECK(a.steps_to_solution == b.steps_to_solution);
  CHECK(a.final_best_unsat == b.final_best_unsat);
  CHECK(a.best_x == b.best_x);
  REQUIRE(a.unsat_trace.has_value());
  CHECK(a.unsat_trace->size() == b.unsat_trace->size());
}

TEST_CASE("run invariants: bounds, ETS soundness, best_unsat monotone") {
  Rng rng(31);
  for (int instance = 0; instance < 10; ++instance) {
    const Cnf cnf = generate_random_ksat(12, 50, 3, 300 + instance);
    DynamicsConfig cfg;
    cfg.max_steps = 4000;
    cfg.record_trace = true;
    PerturbationConfig perturb;
    const RunRecord record = run(cnf, cfg, perturb, rng.next_u64());
    if (record.solved) CHECK(unsat_count(cnf, record.best_x) == 0);
    // best_unsat equals the minimum of the trace.
    int min_seen = cnf.num_clauses();
    for (const TracePoint& point : *record.unsat_trace) min_seen = std::min(min_seen, point.unsat);
    CHECK(record.final_best_unsat == min_seen);
  }
}

TEST_CASE("voltage bounds hold after every step") {
  const Cnf cnf = generate_random_ksat(10, 42, 3, 9);
  DynamicsConfig cfg;
  Rng rng(55);
  SolverState s = init_state(cnf, cfg, rng);
  for (int t = 0; t < 2000; ++t) {
    step(s, cnf, (t / 16) % 3 == 0, cfg);
    CHECK(s.v.minCoeff() >= 0.0);
    CHECK(s.v.maxCoeff() <= 1.0);
    CHECK(s.x == (s.v.array() >= cfg.threshold).cast<int>().matrix());
  }
}

TEST_CASE("single-flip descent: a lone flip in greedy mode strictly improves") {
  Rng rng(71);
  int flips_checked = 0;
  for (int instance = 0; instance < 20; ++instance) {
    const Cnf cnf = generate_random_ksat(20, 91, 3, 500 + instance);
    DynamicsConfig cfg;
    cfg.max_steps = 3000;
    Rng init_rng(rng.next_u64());
    SolverState s = init_state(cnf, cfg, init_rng);
    int prev_unsat = unsat_count(cnf, s.x);
    Assignment prev_x = s.x;
    for (int t = 0; t < cfg.max_steps && prev_unsat > 0; ++t) {
      step(s, cnf, false, cfg);
      const int unsat = unsat_count(cnf, s.x);
      if ((s.x - prev_x).cwiseAbs().sum() == 1) {
        CHECK(unsat < prev_unsat);
        flips_checked++;
      }
      prev_unsat = unsat;
      prev_x = s.x;
    }
  }
  CHECK(flips_checked > 0);
}

TEST_CASE("zero-current fixed point never moves again") {
  const Cnf cnf = worked_example();
  DynamicsConfig cfg;
  SolverState s;
  // Every clause has >= 2 true literals under (1,1,0,0,1,0), so every
  // coupling bit is low and the state is a fixed point.
  s.x = make_assignment({1, 1, 0, 0, 1, 0});
  REQUIRE(unsat_count(cnf, s.x) == 0);
  s.v = Vector::Zero(6);
  for (int i = 0; i < 6; ++i) s.v[i] = s.x[i] ? 1.0 : 0.0;
  s.best_unsat = 0;
  s.best_x = s.x;
  REQUIRE(node_currents(cnf, s.x, false).isZero());
  const Vector v0 = s.v;
  for (int t = 0; t < 100; ++t) step(s, cnf, false, cfg);
  CHECK(s.v == v0);
}

TEST_CASE("config validation") {
  DynamicsConfig cfg;
  cfg.delta_v = 0.7;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.max_steps = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.threshold = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
