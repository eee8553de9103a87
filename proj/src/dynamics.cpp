#include "skisat/dynamics.hpp"

#include <algorithm>

namespace skisat {

void DynamicsConfig::validate() const {
  if (!(delta_v > 0.0 && delta_v < 0.5)) throw std::invalid_argument("delta_v must be in (0, 0.5)");
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::invalid_argument("threshold must be in (0, 1)");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (dt_seconds <= 0.0) throw std::invalid_argument("dt_seconds must be > 0");
  if (init_noise_rms < 0.0) throw std::invalid_argument("init_noise_rms must be >= 0");
  if (v_init < 0.0 || v_init > 1.0) throw std::invalid_argument("v_init must be in [0, 1]");
}

ClauseOutputs clause_outputs(const std::vector<std::uint8_t>& literal_truths, bool p) {
  const auto k = literal_truths.size();
  ClauseOutputs out;
  out.z.assign(k, 0);
  int true_count = 0;
  std::size_t true_pos = 0;
  for (std::size_t m = 0; m < k; ++m) {
    if (literal_truths[m]) {
      true_count++;
      true_pos = m;
    }
  }
  out.t = true_count > 0;
  // z_m = NOR of all other literals: high iff literal m alone can decide the
  // clause. Satisfied clauses are masked while the perturbation bit is high.
  if (true_count == 0) {
    std::fill(out.z.begin(), out.z.end(), 1);
  } else if (true_count == 1 && !p) {
    out.z[true_pos] = 1;
  }
  return out;
}

namespace {

// Per-clause truth summary under x: count of true literals and the index of
// the last true one (the unique one when count == 1).
struct ClauseTruth {
  int true_count;
  int true_pos;
};

ClauseTruth clause_truth(const Clause& clause, const Assignment& x) {
  ClauseTruth t{0, 0};
  for (int m = 0; m < clause.size(); ++m) {
    const Literal& lit = clause.literals[m];
    if ((x[lit.var_index - 1] != 0) != lit.negated) {
      t.true_count++;
      t.true_pos = m;
    }
  }
  return t;
}

}  // namespace

IntVector node_currents(const Cnf& cnf, const Assignment& x, bool p) {
  if (x.size() != cnf.num_vars) throw CnfError("assignment length does not match num_vars");
  IntVector currents = IntVector::Zero(cnf.num_vars);
  for (const Clause& clause : cnf.clauses) {
    const ClauseTruth t = clause_truth(clause, x);
    if (t.true_count == 0) {
      // Unsatisfied: every literal drives its variable toward satisfying.
      for (const Literal& lit : clause.literals)
        currents[lit.var_index - 1] += lit.negated ? -1 : +1;
    } else if (t.true_count == 1 && !p) {
      // Maintain current on the sole satisfier.
      const Literal& lit = clause.literals[t.true_pos];
      currents[lit.var_index - 1] += lit.negated ? -1 : +1;
    }
  }
  return currents;
}

std::pair<int, int> make_break(const Cnf& cnf, const Assignment& x, int var_index) {
  if (var_index < 1 || var_index > cnf.num_vars) throw CnfError("variable index out of range");
  int make = 0;
  int brk = 0;
  for (const Clause& clause : cnf.clauses) {
    const ClauseTruth t = clause_truth(clause, x);
    for (const Literal& lit : clause.literals) {
      if (lit.var_index != var_index) continue;
      if (t.true_count == 0) make++;
      if (t.true_count == 1 && clause.literals[t.true_pos].var_index == var_index) brk++;
      break;
    }
  }
  return {make, brk};
}

void step(SolverState& state, const Cnf& cnf, bool p, const DynamicsConfig& cfg) {
  const IntVector currents = node_currents(cnf, state.x, p);
  state.v = (state.v + cfg.delta_v * currents.cast<Real>()).cwiseMax(0.0).cwiseMin(1.0);
  state.x = (state.v.array() >= cfg.threshold).cast<int>();
  state.step++;
  const int unsat = unsat_count(cnf, state.x);
  if (unsat < state.best_unsat) {
    state.best_unsat = unsat;
    state.best_x = state.x;
  }
}

SolverState init_state(const Cnf& cnf, const DynamicsConfig& cfg, Rng& rng) {
  SolverState state;
  state.v.resize(cnf.num_vars);
  for (int i = 0; i < cnf.num_vars; ++i) {
    const Real noisy = cfg.v_init + cfg.init_noise_rms * rng.next_gaussian();
    state.v[i] = std::clamp(noisy, 0.0, 1.0);
  }
  state.x = (state.v.array() >= cfg.threshold).cast<int>();
  state.best_unsat = unsat_count(cnf, state.x);
  state.best_x = state.x;
  return state;
}

namespace {

RunRecord run_impl(const Cnf& cnf, const DynamicsConfig& cfg,
                   const PerturbationSchedule& schedule, bool inject_noise, Real noise_rms,
                   std::uint64_t seed) {
  cfg.validate();
  if (schedule.covered_steps() < cfg.max_steps)
    throw std::invalid_argument("schedule does not cover max_steps");

  Rng rng(seed);
  SolverState state = init_state(cnf, cfg, rng);

  RunRecord record;
  record.seed = seed;
  record.solver = "ski-sat";
  if (cfg.record_trace) record.unsat_trace.emplace();

  // The inner loop keeps its own current buffer and clause truth counts so a
  // step costs one clause scan with no allocation.
  IntVector currents = IntVector::Zero(cnf.num_vars);

  int unsat = state.best_unsat;
  for (long t = 0;; ++t) {
    const bool p = schedule.bit_at(t);
    if (cfg.record_trace) record.unsat_trace->push_back({t, unsat, p});
    if (unsat == 0) {  // early termination: all clauses satisfied
      record.solved = true;
      record.steps_to_solution = t;
      record.total_steps = t;
      break;
    }
    if (t >= cfg.max_steps) {
      record.total_steps = cfg.max_steps;
      break;
    }

    if (inject_noise && t % schedule.slot_steps == 0)
      apply_gaussian_noise(state, noise_rms, rng, cfg.threshold);

    currents.setZero();
    for (const Clause& clause : cnf.clauses) {
      int true_count = 0;
      int true_pos = 0;
      const int k = clause.size();
      for (int m = 0; m < k; ++m) {
        const Literal& lit = clause.literals[m];
        if ((state.x[lit.var_index - 1] != 0) != lit.negated) {
          true_count++;
          true_pos = m;
        }
      }
      if (true_count == 0) {
        for (const Literal& lit : clause.literals)
          currents[lit.var_index - 1] += lit.negated ? -1 : +1;
      } else if (true_count == 1 && !p) {
        const Literal& lit = clause.literals[true_pos];
        currents[lit.var_index - 1] += lit.negated ? -1 : +1;
      }
    }

    state.v = (state.v + cfg.delta_v * currents.cast<Real>()).cwiseMax(0.0).cwiseMin(1.0);
    state.x = (state.v.array() >= cfg.threshold).cast<int>();
    state.step++;

    unsat = unsat_count(cnf, state.x);
    if (unsat < state.best_unsat) {
      state.best_unsat = unsat;
      state.best_x = state.x;
    }
  }

  record.final_best_unsat = state.best_unsat;
  record.best_x = state.best_x;
  return record;
}

}  // namespace

RunRecord run(const Cnf& cnf, const DynamicsConfig& cfg, const PerturbationSchedule& schedule,
              std::uint64_t seed) {
  return run_impl(cnf, cfg, schedule, false, 0.0, seed);
}

RunRecord run(const Cnf& cnf, const DynamicsConfig& cfg, const PerturbationConfig& perturb,
              std::uint64_t seed) {
  perturb.validate();
  switch (perturb.mode) {
    case PerturbationMode::ski_pulse:
      // Schedule stream decorrelated from the init-noise stream.
      return run_impl(cnf, cfg,
                      build_schedule(perturb, cfg.max_steps, seed ^ 0x632be59bd9b4e019ULL),
                      false, 0.0, seed);
    case PerturbationMode::gaussian_noise:
      return run_impl(cnf, cfg, zero_schedule(perturb.slot_steps, cfg.max_steps), true,
                      perturb.noise_rms, seed);
    case PerturbationMode::none:
      return run_impl(cnf, cfg, zero_schedule(perturb.slot_steps, cfg.max_steps), false, 0.0,
                      seed);
  }
  throw std::logic_error("unreachable");
}

void apply_gaussian_noise(SolverState& state, Real noise_rms, Rng& rng, Real threshold) {
  for (int i = 0; i < state.v.size(); ++i) {
    state.v[i] = std::clamp(state.v[i] + noise_rms * rng.next_gaussian(), 0.0, 1.0);
  }
  state.x = (state.v.array() >= threshold).cast<int>();
}

}  // namespace skisat
