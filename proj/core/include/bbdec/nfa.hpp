#pragma once

#include <map>
#include <string>
#include <string_view>

#include "bbdec/bool_matrix.hpp"
#include "bbdec/machine.hpp"

namespace bbdec {

// NFA (q0, {T_g}, a) with an optional steady state-set s. Symbols are single
// characters; machine NFAs use '0', '1' and the state letters.
struct BooleanNfa {
  int size = 0;
  BoolMatrix q0;
  std::map<char, BoolMatrix> transitions;
  BoolMatrix a;
  BoolMatrix s;

  const BoolMatrix& T(char symbol) const;
};

// q0 * T_word * a^T == 1. Throws std::invalid_argument on an unknown symbol.
bool NfaAccepts(const BooleanNfa& nfa, std::string_view word);

struct FarVerifyReport {
  bool ok = false;
  int failed_condition = 0;  // 2..9 when !ok
  std::string detail;
};

// Checks the eight closure and rejection conditions that make the NFA a
// non-halting proof for the table. Throws std::invalid_argument on shape errors.
FarVerifyReport VerifyFarNfa(const TransitionTable& table, const BooleanNfa& nfa);

}  // namespace bbdec
