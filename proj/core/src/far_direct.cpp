#include "bbdec/far_direct.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbdec {

bool SearchDfa(int n, const std::function<CheckResult(std::span<const int>)>& check,
               std::vector<int>* found) {
  if (n < 1) throw std::invalid_argument("DFA size must be positive");
  std::vector<int> t(2 * n, 0);
  std::vector<int> m(2 * n, 0);
  int k = 1;
  while (true) {
    CheckResult state = check(std::span<const int>(t.data(), k));
    if (state == CheckResult::kMore) {
      int q_new = m[k - 1] + 1;
      t[k] = (q_new < n && 2 * q_new - 1 == k) ? q_new : 0;
    } else if (state == CheckResult::kSkip) {
      do {
        if (k <= 1) return false;
        --k;
      } while (!(t[k] <= m[k - 1] && t[k] < n - 1));
      ++t[k];
    } else {
      if (found) *found = t;
      return true;
    }
    m[k] = std::max(m[k - 1], t[k]);
    ++k;
  }
}

namespace {

struct LeftRule {
  State f;
  Symbol r;
  State t;
  Symbol w;
};

}  // namespace

DirectFarSolver::DirectFarSolver(const TransitionTable& table, int l)
    : table_(table), l_(l), s_(table.num_states()), d_(table.num_states() * l + 1) {
  if (l < 1) throw std::invalid_argument("DFA size must be positive");
  r_.assign(2 * l + 1, {BoolMatrix(d_, d_), BoolMatrix(d_, d_)});
  at_.assign(2 * l + 1, BoolMatrix(d_, 1));
  int bottom = halt_index();
  for (Symbol r = 0; r < 2; ++r) r_[0][r].Set(bottom, bottom);
  for (State f = 0; f < s_; ++f) {
    for (Symbol r = 0; r < 2; ++r) {
      if (!table_.IsHalting(f, r)) continue;
      for (int i = 0; i < l_; ++i) r_[0][r].Set(s_ * i + f, bottom);
    }
  }
  at_[0].Set(bottom, 0);
}

bool DirectFarSolver::ApplyLeftRules(int k, std::span<const int> delta) {
  auto& rk = r_[k];
  std::vector<std::uint64_t> tmp(rk[0].words_per_row());
  bool changed = false;
  for (int i = 0; i < l_; ++i) {
    for (Symbol b = 0; b < 2; ++b) {
      if (2 * i + b >= k) continue;
      int target_dfa = delta[2 * i + b];
      for (State f = 0; f < s_; ++f) {
        for (Symbol r = 0; r < 2; ++r) {
          const auto& tr = table_.Get(f, r);
          if (!tr || tr->move != Move::kLeft) continue;
          rk[tr->write].VectorTimes(rk[b].Row(s_ * i + tr->next), tmp.data());
          changed |= rk[r].OrIntoRow(s_ * target_dfa + f, tmp.data());
        }
      }
    }
  }
  return changed;
}

CheckResult DirectFarSolver::Check(std::span<const int> prefix) {
  int k = static_cast<int>(prefix.size());
  if (k < 1 || k > 2 * l_) throw std::invalid_argument("prefix length out of range");
  r_[k] = r_[k - 1];
  at_[k] = at_[k - 1];

  int i = (k - 1) / 2;
  Symbol w = static_cast<Symbol>((k - 1) % 2);
  int target_dfa = prefix[k - 1];
  for (State f = 0; f < s_; ++f) {
    for (Symbol r = 0; r < 2; ++r) {
      const auto& tr = table_.Get(f, r);
      if (!tr || tr->move != Move::kRight || tr->write != w) continue;
      r_[k][r].Set(s_ * i + f, s_ * target_dfa + tr->next);
    }
  }
  while (ApplyLeftRules(k, prefix)) {
  }
  while (true) {
    BoolMatrix next = r_[k][0] * at_[k] + at_[k];
    if (next == at_[k]) break;
    at_[k] = std::move(next);
  }
  if (at_[k].Get(0, 0)) return CheckResult::kSkip;
  if (k == 2 * l_) return CheckResult::kStop;
  return CheckResult::kMore;
}

DirectFarState SolveMinimalRightNfa(const TransitionTable& table, int l,
                                    std::span<const int> delta) {
  DirectFarSolver solver(table, l);
  DirectFarState state;
  state.l = l;
  state.d = solver.d();
  state.delta.assign(delta.begin(), delta.end());
  int k = static_cast<int>(delta.size());
  for (int j = 1; j <= k; ++j) state.last = solver.Check(delta.first(j));
  state.r0 = solver.R(k, 0);
  state.r1 = solver.R(k, 1);
  state.at = solver.AT(k);
  return state;
}

TransitionTable ScannedTable(const FarCertificate& cert) {
  TransitionTable table = TransitionTable::Parse(cert.machine);
  return cert.left_to_right ? table : table.Mirrored();
}

BooleanNfa AssembleBlockNfa(const FarCertificate& cert, int num_states) {
  int l = cert.l;
  int d = cert.d;
  if (l < 1 || d != num_states * l + 1) throw std::invalid_argument("certificate size mismatch");
  if (static_cast<int>(cert.delta.size()) != 2 * l) throw std::invalid_argument("delta size mismatch");
  for (int q : cert.delta) {
    if (q < 0 || q >= l) throw std::invalid_argument("delta entry out of range");
  }
  auto square = [d](const BoolMatrix& m) { return m.rows() == d && m.cols() == d; };
  auto row = [d](const BoolMatrix& m) { return m.rows() == 1 && m.cols() == d; };
  if (!square(cert.r0) || !square(cert.r1) || !row(cert.a) || !row(cert.s)) {
    throw std::invalid_argument("certificate matrix dimension mismatch");
  }

  int n = l + d;
  BooleanNfa nfa;
  nfa.size = n;
  nfa.q0 = BoolMatrix::Basis(n, 0);
  for (Symbol b = 0; b < 2; ++b) {
    BoolMatrix t(n, n);
    for (int i = 0; i < l; ++i) t.Set(i, cert.delta[2 * i + b]);
    const BoolMatrix& rb = b == 0 ? cert.r0 : cert.r1;
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        if (rb.Get(x, y)) t.Set(l + x, l + y);
      }
    }
    nfa.transitions.emplace(static_cast<char>('0' + b), std::move(t));
  }
  for (State f = 0; f < num_states; ++f) {
    BoolMatrix t(n, n);
    for (int i = 0; i < l; ++i) t.Set(i, l + num_states * i + f);
    nfa.transitions.emplace(StateLetter(f), std::move(t));
  }
  nfa.a = BoolMatrix(1, n);
  nfa.s = BoolMatrix(1, n);
  for (int x = 0; x < d; ++x) {
    if (cert.a.Get(0, x)) nfa.a.Set(0, l + x);
    if (cert.s.Get(0, x)) nfa.s.Set(0, l + x);
  }
  return nfa;
}

FarVerifyReport VerifyFarCertificate(const FarCertificate& cert) {
  TransitionTable scanned = ScannedTable(cert);
  return VerifyFarNfa(scanned, AssembleBlockNfa(cert, scanned.num_states()));
}

std::optional<FarCertificate> FarCertificateForDelta(const TransitionTable& table,
                                                     std::span<const int> delta,
                                                     bool left_to_right) {
  if (delta.empty() || delta.size() % 2 != 0) throw std::invalid_argument("delta must be complete");
  TransitionTable scanned = left_to_right ? table : table.Mirrored();
  int l = static_cast<int>(delta.size() / 2);
  DirectFarState state = SolveMinimalRightNfa(scanned, l, delta);
  if (state.last != CheckResult::kStop) return std::nullopt;
  FarCertificate cert;
  cert.machine = table.ToString();
  cert.left_to_right = left_to_right;
  cert.l = l;
  cert.d = state.d;
  cert.delta.assign(delta.begin(), delta.end());
  cert.r0 = state.r0;
  cert.r1 = state.r1;
  cert.a = state.at.Transposed();
  cert.s = BoolMatrix::Basis(state.d, state.d - 1);
  return cert;
}

FarResult DecideFarDirect(const TransitionTable& table, int n, bool left_to_right) {
  TransitionTable scanned = left_to_right ? table : table.Mirrored();
  DirectFarSolver solver(scanned, n);
  std::vector<int> delta;
  FarResult result;
  if (!SearchDfa(n, [&solver](std::span<const int> p) { return solver.Check(p); }, &delta)) {
    return result;
  }
  auto cert = FarCertificateForDelta(table, delta, left_to_right);
  if (!cert || !VerifyFarCertificate(*cert).ok) return result;
  result.verdict = Verdict::kNonHalt;
  result.certificate = std::move(cert);
  return result;
}

}  // namespace bbdec
