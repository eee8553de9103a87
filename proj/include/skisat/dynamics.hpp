#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skisat/cnf.hpp"
#include "skisat/perturb.hpp"
#include "skisat/types.hpp"

namespace skisat {

// Fixed-step integration constants. Voltages are normalized so the rails sit
// at 0 and 1 and the comparator threshold at 0.5; physical scale enters only
// through delta_v (voltage increment per unit reference current per step) and
// dt_seconds (physical duration of one step). The defaults correspond to a
// 1 mV increment on a 0.6 V half-swing and a 20 ps step.
struct DynamicsConfig {
  Real delta_v = 1.0 / 600.0;
  Real dt_seconds = 20e-12;
  Real v_init = 0.5;
  Real init_noise_rms = 2.4e-4;  // kT/C for 200 fF at 300 K, normalized
  long max_steps = 50000;
  Real threshold = 0.5;
  bool record_trace = false;

  void validate() const;
};

struct SolverState {
  Vector v;           // normalized capacitor voltages, each in [0, 1]
  Assignment x;       // comparator outputs: x[i] = 1 iff v[i] >= threshold
  long step = 0;
  int best_unsat = 0;
  Assignment best_x;
};

// Per-clause comparator outputs: t is the clause satisfiability bit, z[m] is
// the coupling bit for literal m (high iff every other literal is false,
// masked to zero for satisfied clauses while the perturbation bit is high).
struct ClauseOutputs {
  bool t = false;
  std::vector<std::uint8_t> z;
};

struct TracePoint {
  long step;
  int unsat;
  bool p;
};

struct RunRecord {
  bool solved = false;
  std::optional<long> steps_to_solution;
  int final_best_unsat = 0;
  Assignment best_x;
  std::optional<std::vector<TracePoint>> unsat_trace;
  std::uint64_t seed = 0;
  long total_steps = 0;
  std::string solver = "ski-sat";
};

ClauseOutputs clause_outputs(const std::vector<std::uint8_t>& literal_truths, bool p);

// Net coupling current into each node, in units of I_ref. With p = 0 this is
// the negated Hamming-cube gradient of the unsat-count cost function.
IntVector node_currents(const Cnf& cnf, const Assignment& x, bool p);

// make = clauses currently unsatisfied that contain variable i;
// break = clauses whose unique true literal sits on variable i.
std::pair<int, int> make_break(const Cnf& cnf, const Assignment& x, int var_index);

// One synchronous update: all currents from the state at step t, then all
// voltages clamped to the rails and requantized.
void step(SolverState& state, const Cnf& cnf, bool p, const DynamicsConfig& cfg);

SolverState init_state(const Cnf& cnf, const DynamicsConfig& cfg, Rng& rng);

// Full seeded run. The schedule must cover max_steps; gaussian-mode noise
// injection is driven by the PerturbationConfig overload below.
RunRecord run(const Cnf& cnf, const DynamicsConfig& cfg, const PerturbationSchedule& schedule,
              std::uint64_t seed);

// Convenience entry covering all three perturbation modes; the schedule (and
// any noise stream) is derived from the same seed, so a record is
// reproducible from (configs, seed) alone.
RunRecord run(const Cnf& cnf, const DynamicsConfig& cfg, const PerturbationConfig& perturb,
              std::uint64_t seed);

}  // namespace skisat
