#pragma once

#include <cstddef>
#include <vector>

#include "bbdec/far_direct.hpp"
#include "bbdec/machine.hpp"
#include "bbdec/sat.hpp"

namespace bbdec {

// A propositional term: a constant or a variable of the CNF.
struct Term {
  enum class Kind { kFalse, kTrue, kVar };
  Kind kind = Kind::kFalse;
  int var = 0;

  static Term Const(bool v) { return Term{v ? Kind::kTrue : Kind::kFalse, 0}; }
  static Term Var(int v) { return Term{Kind::kVar, v}; }
  bool IsConst() const { return kind != Kind::kVar; }
};

// Meet-in-the-middle encoding: left and right DFAs of n states each (lr 0 is
// the left DFA) and the accepted set A over (i, f, r, j).
struct MitmInstance {
  int n = 0;
  int num_states = 0;
  Cnf cnf;
  // Set when a clause simplified to the empty clause.
  bool trivially_unsat = false;
  // Clauses emitted before constant simplification.
  std::size_t template_clauses = 0;

  std::vector<Term> tk_eq;  // t_k == y
  std::vector<Term> tk_le;  // t_k <= y
  std::vector<Term> mk_eq;  // max(t_0..t_k) == y
  std::vector<Term> accept;

  Term TkEq(int lr, int k, int y) const;
  Term TkLe(int lr, int k, int y) const;
  Term MkEq(int lr, int k, int y) const;
  Term A(int i, State f, Symbol r, int j) const;

  // DFA table of one side read from a model.
  std::vector<int> ExtractDelta(int lr, const std::vector<bool>& model) const;
};

MitmInstance EncodeMitmCnf(const TransitionTable& table, int n);

// Solves the encoding and re-proves the extracted DFA with the direct method.
FarResult DecideFarMitm(const TransitionTable& table, int n);

}  // namespace bbdec
