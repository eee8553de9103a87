#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "skisat/types.hpp"

namespace skisat {

struct CnfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One literal of a clause. var_index is 1-based; negated selects the
// complemented variable.
struct Literal {
  int var_index = 0;
  bool negated = false;

  // Signed DIMACS encoding: +v or -v, never 0.
  int to_dimacs() const { return negated ? -var_index : var_index; }
  static Literal from_dimacs(int code) {
    return Literal{code < 0 ? -code : code, code < 0};
  }

  bool operator==(const Literal&) const = default;
};

struct Clause {
  std::vector<Literal> literals;

  int size() const { return static_cast<int>(literals.size()); }
  bool operator==(const Clause&) const = default;
};

// A CNF formula: conjunction of disjunctive clauses over num_vars variables.
struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  bool operator==(const Cnf&) const = default;
};

struct UnsatReport {
  int unsat_count = 0;
  std::vector<int> unsat_indices;  // 0-based clause indices
};

struct ParseOptions {
  // Tautological clauses (x OR NOT x) are rejected by default: the coupling
  // structure stores one polarity bit per (variable, clause) pair and cannot
  // express both polarities at once. With drop_tautologies they are removed
  // and the declared clause count adjusted accordingly.
  bool drop_tautologies = false;
};

// Parses DIMACS CNF. Accepts `c` comments, a single `p cnf N NC` header,
// 0-terminated clauses, and the trailing `%` / `0` lines found in SATLIB
// distributions. Duplicate literals inside a clause are deduplicated.
// Throws CnfError with a line number on malformed input.
Cnf parse_dimacs(std::istream& in, const ParseOptions& opts = {});
Cnf parse_dimacs(const std::string& text, const ParseOptions& opts = {});
Cnf load_dimacs_file(const std::string& path, const ParseOptions& opts = {});

void serialize_dimacs(const Cnf& cnf, std::ostream& out);
std::string serialize_dimacs(const Cnf& cnf);

// Uniform random k-SAT: each clause draws k distinct variables without
// replacement and independent uniform polarities. Deterministic per seed.
// Duplicate clauses are allowed (standard uniform model).
Cnf generate_random_ksat(int num_vars, int num_clauses, int k, std::uint64_t seed);

// Number of clauses with every literal false under x. This is the cost
// function H evaluated on the Hamming cube.
UnsatReport evaluate(const Cnf& cnf, const Assignment& x);
int unsat_count(const Cnf& cnf, const Assignment& x);

}  // namespace skisat
