#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bbdec/bool_matrix.hpp"
#include "bbdec/decision.hpp"
#include "bbdec/machine.hpp"
#include "bbdec/nfa.hpp"

namespace bbdec {

enum class CheckResult { kMore, kSkip, kStop };

// Enumerates prefixes of canonical, leading-zero-ignoring n-state DFA tables
// (entry 2q+b holds delta(q, b)) and calls check on each. Returns true as soon
// as check answers kStop; the complete table is then copied into found.
bool SearchDfa(int n, const std::function<CheckResult(std::span<const int>)>& check,
               std::vector<int>* found = nullptr);

// Minimal right-hand NFA for a left DFA prefix. With S machine states, right
// state S*i+f is reached from DFA state i on letter f and S*l is the halt state.
class DirectFarSolver {
 public:
  DirectFarSolver(const TransitionTable& table, int l);

  int l() const { return l_; }
  int d() const { return d_; }
  int halt_index() const { return d_ - 1; }

  // Extends the snapshot for prefix.size() - 1 entries by the last entry.
  CheckResult Check(std::span<const int> prefix);

  const BoolMatrix& R(int k, Symbol r) const { return r_[k][r]; }
  const BoolMatrix& AT(int k) const { return at_[k]; }

 private:
  bool ApplyLeftRules(int k, std::span<const int> delta);

  const TransitionTable& table_;
  int l_;
  int s_;
  int d_;
  std::vector<std::array<BoolMatrix, 2>> r_;
  std::vector<BoolMatrix> at_;  // d x 1
};

struct DirectFarState {
  int l = 0;
  int d = 0;
  std::vector<int> delta;
  BoolMatrix r0, r1;
  BoolMatrix at;
  CheckResult last = CheckResult::kMore;
};

// Runs the solver over a whole (possibly partial) delta prefix.
DirectFarState SolveMinimalRightNfa(const TransitionTable& table, int l,
                                    std::span<const int> delta);

struct FarCertificate {
  std::string machine;
  bool left_to_right = true;
  int l = 0;
  int d = 0;
  std::vector<int> delta;
  BoolMatrix r0, r1;  // d x d
  BoolMatrix a;       // 1 x d
  BoolMatrix s;       // 1 x d
};

// Block NFA of size l + d for the table the certificate was built on.
BooleanNfa AssembleBlockNfa(const FarCertificate& cert, int num_states);

// Table as scanned: mirrored when the certificate reads right to left.
TransitionTable ScannedTable(const FarCertificate& cert);

FarVerifyReport VerifyFarCertificate(const FarCertificate& cert);

struct FarResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<FarCertificate> certificate;
};

// Searches left DFAs of exactly n states.
FarResult DecideFarDirect(const TransitionTable& table, int n, bool left_to_right);

// Certificate for a complete delta, or nullopt if it does not prove the machine.
std::optional<FarCertificate> FarCertificateForDelta(const TransitionTable& table,
                                                     std::span<const int> delta,
                                                     bool left_to_right);

}  // namespace bbdec
