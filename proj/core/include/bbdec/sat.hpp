#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bbdec {

// CNF over variables 1..num_vars; literal v is x_v and -v its negation.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  void AddClause(std::vector<int> clause);

  std::string ToDimacs() const;
  // Throws std::invalid_argument on malformed input.
  static Cnf FromDimacs(std::string_view text);
};

struct SatResult {
  bool satisfiable = false;
  // assignment[v - 1] is the value of variable v.
  std::vector<bool> assignment;
};

// Deterministic CDCL solver. A satisfying assignment is re-checked before it is returned.
SatResult SolveCnf(const Cnf& cnf);

bool Satisfies(const Cnf& cnf, const std::vector<bool>& assignment);

}  // namespace bbdec
