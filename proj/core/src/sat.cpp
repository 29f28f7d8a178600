#include "bbdec/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bbdec {

void Cnf::AddClause(std::vector<int> clause) {
  for (int lit : clause) {
    if (lit == 0 || std::abs(lit) > num_vars) throw std::invalid_argument("literal out of range");
  }
  clauses.push_back(std::move(clause));
}

std::string Cnf::ToDimacs() const {
  std::ostringstream out;
  out << "p cnf " << num_vars << " " << clauses.size() << "\n";
  for (const auto& c : clauses) {
    for (int lit : c) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

Cnf Cnf::FromDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  bool header = false;
  std::vector<int> current;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (!(ls >> kind >> cnf.num_vars >> expected) || kind != "cnf") {
        throw std::invalid_argument("bad DIMACS header");
      }
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("DIMACS clause before header");
    std::istringstream all(line);
    int lit;
    while (all >> lit) {
      if (lit == 0) {
        cnf.AddClause(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
    if (!all.eof()) throw std::invalid_argument("bad DIMACS literal");
  }
  if (!current.empty()) cnf.AddClause(current);
  if (!header) throw std::invalid_argument("missing DIMACS header");
  if (cnf.clauses.size() != expected) throw std::invalid_argument("DIMACS clause count mismatch");
  return cnf;
}

bool Satisfies(const Cnf& cnf, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != cnf.num_vars) return false;
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int lit : c) {
      if (assignment[std::abs(lit) - 1] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

// Literal index: 2 * var + sign, var 0-based, sign 1 for negation.
using Lit = int;
constexpr int kUndef = -1;

Lit FromDimacsLit(int lit) { return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0); }
int VarOf(Lit l) { return l >> 1; }

class Solver {
 public:
  explicit Solver(int n)
      : n_(n),
        value_(n, kUndef),
        level_(n, 0),
        reason_(n, kUndef),
        phase_(n, 0),
        activity_(n, 0.0),
        seen_(n, 0),
        watches_(2 * static_cast<std::size_t>(n)),
        heap_index_(n, kUndef) {
    for (int v = 0; v < n; ++v) HeapInsert(v);
  }

  bool AddClause(std::vector<Lit> c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (c[i] == (c[i - 1] ^ 1)) return true;  // tautology
    }
    if (c.empty()) return false;
    if (c.size() == 1) {
      int v = LitValue(c[0]);
      if (v == 0) return false;
      if (v == kUndef) Enqueue(c[0], kUndef);
      return true;
    }
    Attach(std::move(c));
    return true;
  }

  bool Solve() {
    if (Propagate() != kUndef) return false;
    int restart = 0;
    while (true) {
      int budget = 100 * Luby(restart++);
      int result = Search(budget);
      if (result != kUndef) return result == 1;
      Backtrack(0);
    }
  }

  std::vector<bool> Model() const {
    std::vector<bool> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = value_[v] == 1;
    return out;
  }

 private:
  int LitValue(Lit l) const {
    int v = value_[VarOf(l)];
    return v == kUndef ? kUndef : v ^ (l & 1);
  }

  void Attach(std::vector<Lit> c) {
    int idx = static_cast<int>(clauses_.size());
    watches_[c[0]].push_back(idx);
    watches_[c[1]].push_back(idx);
    clauses_.push_back(std::move(c));
  }

  void Enqueue(Lit l, int reason) {
    int v = VarOf(l);
    value_[v] = (l & 1) ? 0 : 1;
    level_[v] = DecisionLevel();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  int DecisionLevel() const { return static_cast<int>(trail_lim_.size()); }

  // Returns the index of a conflicting clause or kUndef.
  int Propagate() {
    while (qhead_ < trail_.size()) {
      Lit p = trail_[qhead_++];
      Lit false_lit = p ^ 1;
      auto& ws = watches_[false_lit];
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < ws.size()) {
        int ci = ws[i++];
        auto& c = clauses_[ci];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (LitValue(c[0]) == 1) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (LitValue(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (LitValue(c[0]) == 0) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        Enqueue(c[0], ci);
      }
      ws.resize(j);
    }
    return kUndef;
  }

  void Analyze(int conflict, std::vector<Lit>& learnt, int& backjump) {
    learnt.assign(1, 0);
    int counter = 0;
    Lit p = kUndef;
    int idx = static_cast<int>(trail_.size()) - 1;
    int ci = conflict;
    do {
      const auto& c = clauses_[ci];
      for (std::size_t k = (p == kUndef ? 0 : 1); k < c.size(); ++k) {
        Lit q = c[k];
        int v = VarOf(q);
        if (seen_[v] || level_[v] == 0) continue;
        Bump(v);
        seen_[v] = 1;
        if (level_[v] == DecisionLevel()) {
          ++counter;
        } else {
          learnt.push_back(q);
        }
      }
      while (!seen_[VarOf(trail_[idx])]) --idx;
      p = trail_[idx--];
      ci = reason_[VarOf(p)];
      seen_[VarOf(p)] = 0;
      --counter;
    } while (counter > 0);
    learnt[0] = p ^ 1;

    backjump = 0;
    std::size_t max_at = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      seen_[VarOf(learnt[k])] = 0;
      if (level_[VarOf(learnt[k])] > backjump) {
        backjump = level_[VarOf(learnt[k])];
        max_at = k;
      }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[max_at]);
  }

  void Backtrack(int level) {
    if (DecisionLevel() <= level) return;
    for (int k = static_cast<int>(trail_.size()) - 1; k >= trail_lim_[level]; --k) {
      int v = VarOf(trail_[k]);
      phase_[v] = value_[v];
      value_[v] = kUndef;
      reason_[v] = kUndef;
      if (heap_index_[v] == kUndef) HeapInsert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
  }

  // 1 = SAT, 0 = UNSAT, kUndef = restart.
  int Search(int conflict_budget) {
    std::vector<Lit> learnt;
    int conflicts = 0;
    while (true) {
      int conflict = Propagate();
      if (conflict != kUndef) {
        if (DecisionLevel() == 0) return 0;
        ++conflicts;
        int backjump = 0;
        Analyze(conflict, learnt, backjump);
        Backtrack(backjump);
        if (learnt.size() == 1) {
          Enqueue(learnt[0], kUndef);
        } else {
          int idx = static_cast<int>(clauses_.size());
          Attach(learnt);
          Enqueue(learnt[0], idx);
        }
        Decay();
        continue;
      }
      if (conflicts >= conflict_budget) return kUndef;
      int v = PickBranchVar();
      if (v == kUndef) return 1;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      Enqueue(2 * v + (phase_[v] == 1 ? 0 : 1), kUndef);
    }
  }

  // Luby sequence 1 1 2 1 1 2 4 ... indexed from 0.
  static int Luby(int x) {
    int size = 1;
    int seq = 0;
    while (size < x + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return 1 << seq;
  }

  void Bump(int v) {
    activity_[v] += inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      inc_ *= 1e-100;
    }
    if (heap_index_[v] != kUndef) SiftUp(heap_index_[v]);
  }

  void Decay() { inc_ /= 0.95; }

  int PickBranchVar() {
    while (!heap_.empty()) {
      int v = HeapPop();
      if (value_[v] == kUndef) return v;
    }
    return kUndef;
  }

  // Max-heap on activity; ties broken by the smaller variable index.
  bool Before(int a, int b) const {
    if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
    return a < b;
  }

  void HeapInsert(int v) {
    heap_index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    SiftUp(heap_index_[v]);
  }

  int HeapPop() {
    int top = heap_[0];
    heap_index_[top] = kUndef;
    int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_index_[last] = 0;
      SiftDown(0);
    }
    return top;
  }

  void SiftUp(int i) {
    int v = heap_[i];
    while (i > 0) {
      int parent = (i - 1) / 2;
      if (!Before(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_index_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }

  void SiftDown(int i) {
    int v = heap_[i];
    int size = static_cast<int>(heap_.size());
    while (true) {
      int child = 2 * i + 1;
      if (child >= size) break;
      if (child + 1 < size && Before(heap_[child + 1], heap_[child])) ++child;
      if (!Before(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_index_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }

  int n_;
  std::vector<int> value_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int> phase_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  double inc_ = 1.0;
  std::vector<int> heap_;
  std::vector<int> heap_index_;
};

}  // namespace

SatResult SolveCnf(const Cnf& cnf) {
  Solver solver(cnf.num_vars);
  for (const auto& c : cnf.clauses) {
    std::vector<Lit> lits;
    lits.reserve(c.size());
    for (int lit : c) lits.push_back(FromDimacsLit(lit));
    if (!solver.AddClause(std::move(lits))) return SatResult{};
  }
  if (!solver.Solve()) return SatResult{};
  SatResult result{true, solver.Model()};
  if (!Satisfies(cnf, result.assignment)) {
    throw std::logic_error("SAT model fails clause re-check");
  }
  return result;
}

}  // namespace bbdec
