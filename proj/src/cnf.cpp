#include "skisat/cnf.hpp"

#include "skisat/rng.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace skisat {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw CnfError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Cnf parse_dimacs(std::istream& in, const ParseOptions& opts) {
  Cnf cnf;
  bool header_seen = false;
  int declared_clauses = 0;
  int dropped_tautologies = 0;
  std::vector<int> pending;  // literals of the clause being read
  std::string line;
  int line_no = 0;
  bool at_eof_marker = false;

  auto flush_clause = [&](int where) {
    Clause clause;
    for (int code : pending) {
      Literal lit = Literal::from_dimacs(code);
      if (lit.var_index > cnf.num_vars)
        fail(where, "variable " + std::to_string(lit.var_index) + " exceeds declared count " +
                        std::to_string(cnf.num_vars));
      bool duplicate = false;
      for (const Literal& prev : clause.literals) {
        if (prev.var_index != lit.var_index) continue;
        if (prev.negated != lit.negated) {
          if (!opts.drop_tautologies)
            fail(where, "tautological clause on variable " + std::to_string(lit.var_index));
          dropped_tautologies++;
          pending.clear();
          return;
        }
        duplicate = true;
      }
      if (duplicate) {
        std::cerr << "warning: duplicate literal " << code << " dropped (line " << where << ")\n";
        continue;
      }
      clause.literals.push_back(lit);
    }
    pending.clear();
    cnf.clauses.push_back(std::move(clause));
  };

  while (std::getline(in, line)) {
    line_no++;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok.size() > 1 && tok[0] == 'c') continue;
    if (tok == "%") {
      at_eof_marker = true;  // SATLIB trailer; ignore everything after it
      break;
    }
    if (tok == "p") {
      if (header_seen) fail(line_no, "duplicate header");
      std::string fmt;
      if (!(ls >> fmt) || fmt != "cnf") fail(line_no, "expected 'p cnf N NC' header");
      if (!(ls >> cnf.num_vars >> declared_clauses)) fail(line_no, "malformed header");
      if (cnf.num_vars < 1 || declared_clauses < 1) fail(line_no, "header counts must be >= 1");
      header_seen = true;
      continue;
    }
    if (!header_seen) fail(line_no, "clause data before 'p cnf' header");
    ls.clear();
    ls.seekg(0);
    int code;
    while (ls >> code) {
      if (code == 0) {
        if (pending.empty() && static_cast<int>(cnf.clauses.size()) + dropped_tautologies >=
                                   declared_clauses) {
          at_eof_marker = true;  // bare trailing 0 after the last clause (SATLIB quirk)
          break;
        }
        if (pending.empty()) fail(line_no, "empty clause");
        flush_clause(line_no);
      } else {
        pending.push_back(code);
      }
    }
    if (at_eof_marker) break;
    if (!ls.eof() && ls.fail()) fail(line_no, "expected integer literal");
  }

  if (!header_seen) throw CnfError("missing 'p cnf' header");
  if (!pending.empty()) fail(line_no, "unterminated clause (missing 0)");
  if (cnf.num_clauses() + dropped_tautologies != declared_clauses)
    throw CnfError("clause count mismatch: header declares " + std::to_string(declared_clauses) +
                   ", file contains " +
                   std::to_string(cnf.num_clauses() + dropped_tautologies));
  return cnf;
}

Cnf parse_dimacs(const std::string& text, const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_dimacs(in, opts);
}

Cnf load_dimacs_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw CnfError("cannot open " + path);
  return parse_dimacs(in, opts);
}

void serialize_dimacs(const Cnf& cnf, std::ostream& out) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.num_clauses() << '\n';
  for (const Clause& clause : cnf.clauses) {
    for (const Literal& lit : clause.literals) out << lit.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string serialize_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  serialize_dimacs(cnf, out);
  return out.str();
}

Cnf generate_random_ksat(int num_vars, int num_clauses, int k, std::uint64_t seed) {
  if (k < 1 || k > num_vars)
    throw CnfError("k must satisfy 1 <= k <= num_vars");
  if (num_clauses < 1) throw CnfError("num_clauses must be >= 1");
  Rng rng(seed);
  Cnf cnf;
  cnf.num_vars = num_vars;
  cnf.clauses.reserve(num_clauses);
  std::vector<int> picked;
  for (int j = 0; j < num_clauses; ++j) {
    picked.clear();
    Clause clause;
    while (static_cast<int>(picked.size()) < k) {
      const int var = 1 + static_cast<int>(rng.next_below(num_vars));
      if (std::find(picked.begin(), picked.end(), var) != picked.end()) continue;
      picked.push_back(var);
      clause.literals.push_back(Literal{var, rng.next_bool(0.5)});
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

UnsatReport evaluate(const Cnf& cnf, const Assignment& x) {
  if (x.size() != cnf.num_vars) throw CnfError("assignment length does not match num_vars");
  UnsatReport report;
  for (int j = 0; j < cnf.num_clauses(); ++j) {
    bool satisfied = false;
    for (const Literal& lit : cnf.clauses[j].literals) {
      const bool value = x[lit.var_index - 1] != 0;
      if (value != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) {
      report.unsat_count++;
      report.unsat_indices.push_back(j);
    }
  }
  return report;
}

int unsat_count(const Cnf& cnf, const Assignment& x) {
  if (x.size() != cnf.num_vars) throw CnfError("assignment length does not match num_vars");
  int count = 0;
  for (const Clause& clause : cnf.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause.literals) {
      if ((x[lit.var_index - 1] != 0) != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) count++;
  }
  return count;
}

}  // namespace skisat
