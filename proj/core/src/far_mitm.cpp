#include "bbdec/far_mitm.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbdec {

namespace {

int Index3(int n, int lr, int k, int y) { return (lr * 2 * n + k) * (n + 1) + y; }

class Encoder {
 public:
  Encoder(const TransitionTable& table, int n) : table_(table), n_(n) {
    inst_.n = n;
    inst_.num_states = table.num_states();
  }

  MitmInstance Run() {
    AllocateVariables();
    TransitionValidity();
    ClosureConditions();
    CanonicalForm();
    return std::move(inst_);
  }

 private:
  Term NewVar() { return Term::Var(++inst_.cnf.num_vars); }

  void AllocateVariables() {
    int n = n_;
    std::size_t size = static_cast<std::size_t>(2 * 2 * n * (n + 1));
    inst_.tk_eq.resize(size);
    inst_.tk_le.resize(size);
    inst_.mk_eq.resize(size);
    for (int lr = 0; lr < 2; ++lr) {
      for (int k = 0; k < 2 * n; ++k) {
        for (int y = 0; y <= n; ++y) {
          int at = Index3(n, lr, k, y);
          Term eq;
          if (y == 0 && std::min(k, n - 1) == 0) {
            eq = Term::Const(true);
          } else if (y <= std::min(k, n - 1)) {
            eq = NewVar();
          } else {
            eq = Term::Const(false);
          }
          inst_.tk_eq[at] = eq;

          if (y <= 0) {
            inst_.tk_le[at] = eq;
          } else if (y <= std::min(k - 1, n - 2)) {
            inst_.tk_le[at] = NewVar();
          } else {
            inst_.tk_le[at] = Term::Const(true);
          }

          if (k == 2 * n - 1 && y == n - 1) {
            inst_.mk_eq[at] = Term::Const(true);
          } else if (!((k + 1) / 2 <= y && y < std::min(n, k + 1))) {
            inst_.mk_eq[at] = Term::Const(false);
          } else if (std::min(n, k + 1) - (k + 1) / 2 <= 1) {
            inst_.mk_eq[at] = Term::Const(true);
          } else {
            inst_.mk_eq[at] = NewVar();
          }
        }
      }
    }
    int s = table_.num_states();
    inst_.accept.resize(static_cast<std::size_t>(n) * s * 2 * n);
    for (int i = 0; i < n; ++i) {
      for (State f = 0; f < s; ++f) {
        for (Symbol r = 0; r < 2; ++r) {
          for (int j = 0; j < n; ++j) {
            std::size_t at = ((static_cast<std::size_t>(i) * s + f) * 2 + r) * n + j;
            // The initial configuration's class must be rejected.
            inst_.accept[at] = (i == 0 && f == 0 && r == 0 && j == 0) ? Term::Const(false) : NewVar();
          }
        }
      }
    }
  }

  // premises -> conclusion, simplified against constants.
  void Implication(std::initializer_list<Term> premises, Term conclusion) {
    ++inst_.template_clauses;
    std::vector<int> clause;
    for (const Term& p : premises) {
      if (p.kind == Term::Kind::kFalse) return;
      if (p.kind == Term::Kind::kVar) clause.push_back(-p.var);
    }
    if (conclusion.kind == Term::Kind::kTrue) return;
    if (conclusion.kind == Term::Kind::kVar) clause.push_back(conclusion.var);
    Emit(std::move(clause));
  }

  void Disjunction(const std::vector<Term>& terms) {
    ++inst_.template_clauses;
    std::vector<int> clause;
    for (const Term& t : terms) {
      if (t.kind == Term::Kind::kTrue) return;
      if (t.kind == Term::Kind::kVar) clause.push_back(t.var);
    }
    Emit(std::move(clause));
  }

  void Emit(std::vector<int> clause) {
    if (clause.empty()) inst_.trivially_unsat = true;
    inst_.cnf.clauses.push_back(std::move(clause));
  }

  static Term Not(Term t) {
    if (t.kind == Term::Kind::kVar) return Term::Var(-t.var);
    return Term::Const(t.kind == Term::Kind::kFalse);
  }

  void TransitionValidity() {
    for (int lr = 0; lr < 2; ++lr) {
      for (int k = 0; k < 2 * n_; ++k) {
        for (int y = 0; y < n_; ++y) {
          Implication({inst_.TkEq(lr, k, y)}, inst_.TkLe(lr, k, y));
          Implication({inst_.TkLe(lr, k, y)}, inst_.TkLe(lr, k, y + 1));
          Implication({inst_.TkEq(lr, k, y + 1)}, Not(inst_.TkLe(lr, k, y)));
        }
      }
    }
    for (int lr = 0; lr < 2; ++lr) {
      for (int k = 1; k < 2 * n_; ++k) {
        std::vector<Term> terms;
        for (int y = 0; y <= std::min(k, n_ - 1); ++y) terms.push_back(inst_.TkEq(lr, k, y));
        Disjunction(terms);
      }
    }
  }

  void ClosureConditions() {
    int n = n_;
    int s = table_.num_states();
    for (State f = 0; f < s; ++f) {
      for (Symbol r = 0; r < 2; ++r) {
        if (!table_.IsHalting(f, r)) continue;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) Implication({}, inst_.A(i, f, r, j));
        }
      }
    }
    for (State f = 0; f < s; ++f) {
      for (Symbol r = 0; r < 2; ++r) {
        const auto& t = table_.Get(f, r);
        if (!t || t->move != Move::kLeft) continue;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            for (int ib = 0; ib < n; ++ib) {
              for (int jw = 0; jw < n; ++jw) {
                for (Symbol b = 0; b < 2; ++b) {
                  Implication({inst_.TkEq(0, 2 * i + b, ib), inst_.TkEq(1, 2 * j + t->write, jw),
                               inst_.A(i, t->next, b, jw)},
                              inst_.A(ib, f, r, j));
                }
              }
            }
          }
        }
      }
    }
    for (State f = 0; f < s; ++f) {
      for (Symbol r = 0; r < 2; ++r) {
        const auto& t = table_.Get(f, r);
        if (!t || t->move != Move::kRight) continue;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            for (int iw = 0; iw < n; ++iw) {
              for (int jb = 0; jb < n; ++jb) {
                for (Symbol b = 0; b < 2; ++b) {
                  Implication({inst_.TkEq(1, 2 * j + b, jb), inst_.TkEq(0, 2 * i + t->write, iw),
                               inst_.A(iw, t->next, b, j)},
                              inst_.A(i, f, r, jb));
                }
              }
            }
          }
        }
      }
    }
  }

  void CanonicalForm() {
    for (int lr = 0; lr < 2; ++lr) {
      for (int k = 1; k < 2 * n_; ++k) {
        for (int m = k / 2; m <= std::min(n_, k); ++m) {
          Term prev = inst_.MkEq(lr, k - 1, m);
          Implication({prev}, inst_.TkLe(lr, k, m + 1));
          Implication({prev, inst_.TkLe(lr, k, m)}, inst_.MkEq(lr, k, m));
          Implication({prev, inst_.TkEq(lr, k, m + 1)}, inst_.MkEq(lr, k, m + 1));
        }
      }
    }
  }

  const TransitionTable& table_;
  int n_;
  MitmInstance inst_;
};

}  // namespace

Term MitmInstance::TkEq(int lr, int k, int y) const {
  if (y < 0 || y > n) return Term::Const(false);
  return tk_eq[Index3(n, lr, k, y)];
}

Term MitmInstance::TkLe(int lr, int k, int y) const {
  if (y < 0) return Term::Const(false);
  if (y > n) return Term::Const(true);
  return tk_le[Index3(n, lr, k, y)];
}

Term MitmInstance::MkEq(int lr, int k, int y) const {
  if (y < 0 || y > n) return Term::Const(false);
  return mk_eq[Index3(n, lr, k, y)];
}

Term MitmInstance::A(int i, State f, Symbol r, int j) const {
  return accept[((static_cast<std::size_t>(i) * num_states + f) * 2 + r) * n + j];
}

std::vector<int> MitmInstance::ExtractDelta(int lr, const std::vector<bool>& model) const {
  std::vector<int> delta(2 * n, -1);
  for (int k = 0; k < 2 * n; ++k) {
    for (int y = 0; y < n; ++y) {
      Term t = TkEq(lr, k, y);
      bool value = t.kind == Term::Kind::kTrue ||
                   (t.kind == Term::Kind::kVar && model[t.var - 1]);
      if (!value) continue;
      if (delta[k] != -1) throw std::logic_error("model assigns two DFA targets");
      delta[k] = y;
    }
    if (delta[k] == -1) throw std::logic_error("model assigns no DFA target");
  }
  return delta;
}

MitmInstance EncodeMitmCnf(const TransitionTable& table, int n) {
  if (n < 1) throw std::invalid_argument("DFA size must be positive");
  return Encoder(table, n).Run();
}

FarResult DecideFarMitm(const TransitionTable& table, int n) {
  FarResult result;
  MitmInstance inst = EncodeMitmCnf(table, n);
  if (inst.trivially_unsat) return result;
  SatResult sat = SolveCnf(inst.cnf);
  if (!sat.satisfiable) return result;
  for (int lr = 0; lr < 2; ++lr) {
    std::vector<int> delta = inst.ExtractDelta(lr, sat.assignment);
    // The right DFA reads the tape from the far right, which is the left DFA of the mirror.
    auto cert = FarCertificateForDelta(table, delta, /*left_to_right=*/lr == 0);
    if (cert && VerifyFarCertificate(*cert).ok) {
      result.verdict = Verdict::kNonHalt;
      result.certificate = std::move(cert);
      return result;
    }
  }
  return result;
}

}  // namespace bbdec
