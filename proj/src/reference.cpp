#include "skisat/reference.hpp"

#include <algorithm>
#include <vector>

namespace skisat {

void WalkSatParams::validate() const {
  if (noise_prob < 0.0 || noise_prob > 1.0)
    throw std::invalid_argument("noise_prob must lie in [0, 1]");
  if (cutoff_flips < 1) throw std::invalid_argument("cutoff_flips must be >= 1");
  if (max_tries < 1) throw std::invalid_argument("max_tries must be >= 1");
}

namespace {

// Incremental clause bookkeeping for the flip loop: per-clause true-literal
// counts, the list of unsatisfied clauses, and per-variable occurrence lists.
struct WalkSatWork {
  struct Occurrence {
    int clause;
    bool negated;
  };

  explicit WalkSatWork(const Cnf& cnf)
      : cnf(cnf), true_counts(cnf.num_clauses(), 0), unsat_pos(cnf.num_clauses(), -1),
        occurrences(cnf.num_vars) {
    for (int j = 0; j < cnf.num_clauses(); ++j)
      for (const Literal& lit : cnf.clauses[j].literals)
        occurrences[lit.var_index - 1].push_back({j, lit.negated});
  }

  void reset(const Assignment& assignment) {
    x = assignment;
    unsat.clear();
    std::fill(unsat_pos.begin(), unsat_pos.end(), -1);
    for (int j = 0; j < cnf.num_clauses(); ++j) {
      int count = 0;
      for (const Literal& lit : cnf.clauses[j].literals)
        if ((x[lit.var_index - 1] != 0) != lit.negated) count++;
      true_counts[j] = count;
      if (count == 0) mark_unsat(j);
    }
  }

  void flip(int var) {
    x[var] = 1 - x[var];
    for (const Occurrence& occ : occurrences[var]) {
      const bool now_true = (x[var] != 0) != occ.negated;
      if (now_true) {
        if (++true_counts[occ.clause] == 1) mark_sat(occ.clause);
      } else {
        if (--true_counts[occ.clause] == 0) mark_unsat(occ.clause);
      }
    }
  }

  // Clauses that flipping var would newly break (their unique true literal
  // sits on var).
  int break_count(int var) const {
    int count = 0;
    for (const Occurrence& occ : occurrences[var])
      if (true_counts[occ.clause] == 1 && ((x[var] != 0) != occ.negated)) count++;
    return count;
  }

  const Cnf& cnf;
  Assignment x;
  std::vector<int> true_counts;
  std::vector<int> unsat;      // indices of unsatisfied clauses
  std::vector<int> unsat_pos;  // clause -> position in unsat, or -1
  std::vector<std::vector<Occurrence>> occurrences;
 private:
  void mark_unsat(int j) {
    unsat_pos[j] = static_cast<int>(unsat.size());
    unsat.push_back(j);
  }
  void mark_sat(int j) {
    const int pos = unsat_pos[j];
    const int last = unsat.back();
    unsat[pos] = last;
    unsat_pos[last] = pos;
    unsat.pop_back();
    unsat_pos[j] = -1;
  }
};

}  // namespace

RunRecord walksat(const Cnf& cnf, const WalkSatParams& params) {
  params.validate();
  Rng rng(params.seed);
  WalkSatWork work(cnf);

  RunRecord record;
  record.solver = "walksat";
  record.seed = params.seed;
  record.final_best_unsat = cnf.num_clauses() + 1;

  long total_flips = 0;
  for (int attempt = 0; attempt < params.max_tries && !record.solved; ++attempt) {
    Assignment init(cnf.num_vars);
    for (int i = 0; i < cnf.num_vars; ++i) init[i] = rng.next_bool(0.5) ? 1 : 0;
    work.reset(init);

    for (long flip = 0; flip <= params.cutoff_flips; ++flip) {
      const int unsat = static_cast<int>(work.unsat.size());
      if (unsat < record.final_best_unsat) {
        record.final_best_unsat = unsat;
        record.best_x = work.x;
      }
      if (unsat == 0) {
        record.solved = true;
        record.steps_to_solution = total_flips;
        break;
      }
      if (flip == params.cutoff_flips) break;

      const int clause_idx = work.unsat[rng.next_below(work.unsat.size())];
      const Clause& clause = cnf.clauses[clause_idx];

      int chosen = -1;
      int min_break = cnf.num_clauses() + 1;
      int min_break_var = -1;
      for (const Literal& lit : clause.literals) {
        const int var = lit.var_index - 1;
        const int breaks = work.break_count(var);
        if (breaks == 0) {
          chosen = var;  // free move
          break;
        }
        if (breaks < min_break) {
          min_break = breaks;
          min_break_var = var;
        }
      }
      if (chosen < 0) {
        if (rng.next_bool(params.noise_prob)) {
          chosen = clause.literals[rng.next_below(clause.literals.size())].var_index - 1;
        } else {
          chosen = min_break_var;
        }
      }
      work.flip(chosen);
      total_flips++;
    }
  }
  record.total_steps = total_flips;

  // Claimed solutions always re-verified against the formula.
  if (record.solved && unsat_count(cnf, record.best_x) != 0)
    throw std::logic_error("walksat bookkeeping error: claimed solution does not verify");
  return record;
}

OracleResult brute_force(const Cnf& cnf) {
  if (cnf.num_vars > 26) throw CnfError("brute_force limited to N <= 26");
  const std::uint32_t total = 1u << cnf.num_vars;

  // Per-clause bitmasks of positive and negated variables; clause j is
  // unsatisfied under bits iff no positive bit is set and no negated bit is
  // clear.
  struct ClauseMasks {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<ClauseMasks> masks(cnf.num_clauses());
  for (int j = 0; j < cnf.num_clauses(); ++j)
    for (const Literal& lit : cnf.clauses[j].literals) {
      const std::uint32_t bit = 1u << (lit.var_index - 1);
      if (lit.negated)
        masks[j].neg |= bit;
      else
        masks[j].pos |= bit;
    }

  OracleResult result;
  result.min_unsat = cnf.num_clauses() + 1;
  std::uint32_t best_bits = 0;
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    int unsat = 0;
    for (const ClauseMasks& m : masks) {
      // Satisfied iff some positive literal's bit is set or some negative
      // literal's bit is clear.
      if ((bits & m.pos) == 0 && (~bits & m.neg) == 0) unsat++;
    }
    if (unsat < result.min_unsat) {
      result.min_unsat = unsat;
      best_bits = bits;
      if (unsat == 0) break;
    }
  }

  result.witness.resize(cnf.num_vars);
  for (int i = 0; i < cnf.num_vars; ++i) result.witness[i] = (best_bits >> i) & 1u;
  result.satisfiable = result.min_unsat == 0;
  return result;
}

}  // namespace skisat
