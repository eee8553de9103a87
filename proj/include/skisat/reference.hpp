#pragma once

#include <cstdint>

#include "skisat/cnf.hpp"
#include "skisat/dynamics.hpp"
#include "skisat/types.hpp"

namespace skisat {

struct WalkSatParams {
  Real noise_prob = 0.5;      // probability of a random-walk move
  long cutoff_flips = 100000;  // flips per try before restarting
  int max_tries = 10;
  std::uint64_t seed = 0;

  void validate() const;
};

struct OracleResult {
  int min_unsat = 0;
  Assignment witness;
  bool satisfiable = false;
};

// WalkSAT with the SKC heuristic: pick a random unsatisfied clause; if any of
// its variables has break count 0, flip it (free move); otherwise flip a
// random clause variable with probability noise_prob, else the
// minimum-break variable. Restarts from a fresh random assignment up to
// max_tries. total_steps in the record counts flips across all tries.
RunRecord walksat(const Cnf& cnf, const WalkSatParams& params);

// Exhaustive MAX-SAT oracle over all 2^N assignments. Requires N <= 26.
OracleResult brute_force(const Cnf& cnf);

}  // namespace skisat
