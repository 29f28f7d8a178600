#include "bbdec/nfa.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace bbdec {

const BoolMatrix& BooleanNfa::T(char symbol) const {
  auto it = transitions.find(symbol);
  if (it == transitions.end()) {
    throw std::invalid_argument(std::string("unknown NFA symbol '") + symbol + "'");
  }
  return it->second;
}

bool NfaAccepts(const BooleanNfa& nfa, std::string_view word) {
  BoolMatrix q = nfa.q0;
  for (char c : word) q = q * nfa.T(c);
  return !(q * nfa.a.Transposed()).IsZero();
}

namespace {

FarVerifyReport Fail(int condition, std::string detail) {
  return FarVerifyReport{false, condition, std::move(detail)};
}

void CheckShapes(const TransitionTable& table, const BooleanNfa& nfa) {
  int n = nfa.size;
  auto vector_ok = [n](const BoolMatrix& v) { return v.rows() == 1 && v.cols() == n; };
  if (!vector_ok(nfa.q0) || !vector_ok(nfa.a) || !vector_ok(nfa.s)) {
    throw std::invalid_argument("NFA vector dimension mismatch");
  }
  std::string symbols = "01";
  for (State f = 0; f < table.num_states(); ++f) symbols.push_back(StateLetter(f));
  for (char c : symbols) {
    const BoolMatrix& t = nfa.T(c);
    if (t.rows() != n || t.cols() != n) throw std::invalid_argument("NFA matrix dimension mismatch");
  }
}

}  // namespace

FarVerifyReport VerifyFarNfa(const TransitionTable& table, const BooleanNfa& nfa) {
  CheckShapes(table, nfa);
  const BoolMatrix& t0 = nfa.T('0');
  const BoolMatrix& t1 = nfa.T('1');
  auto bit = [&nfa](char b) -> const BoolMatrix& { return nfa.T(static_cast<char>('0' + b)); };
  auto letter = [&nfa](State s) -> const BoolMatrix& { return nfa.T(StateLetter(s)); };
  BoolMatrix at = nfa.a.Transposed();

  if (!(nfa.q0 * t0 == nfa.q0)) return Fail(2, "q0 T0 != q0");
  if (!(t0 * at == at)) return Fail(3, "T0 a^T != a^T");
  if ((nfa.s * at).IsZero()) return Fail(4, "s a^T != 1");
  if (!nfa.s.LessEq(nfa.s * t0) || !nfa.s.LessEq(nfa.s * t1)) return Fail(5, "s is not steady");

  // Every state-set reachable from q0 over {0,1}.
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<BoolMatrix> frontier{nfa.q0};
  std::vector<BoolMatrix> closure;
  auto key = [](const BoolMatrix& q) { return std::vector<std::uint64_t>(q.Row(0), q.Row(0) + q.words_per_row()); };
  seen.insert(key(nfa.q0));
  while (!frontier.empty()) {
    BoolMatrix q = std::move(frontier.back());
    frontier.pop_back();
    for (const BoolMatrix* t : {&t0, &t1}) {
      BoolMatrix next = q * *t;
      if (seen.insert(key(next)).second) frontier.push_back(next);
    }
    closure.push_back(std::move(q));
  }

  for (State f = 0; f < table.num_states(); ++f) {
    for (Symbol r = 0; r < 2; ++r) {
      const auto& tr = table.Get(f, r);
      if (!tr) {
        BoolMatrix tfr = letter(f) * bit(r);
        for (const auto& q : closure) {
          if (!nfa.s.LessEq(q * tfr)) {
            return Fail(6, std::string("halting rule ") + StateLetter(f) + char('0' + r));
          }
        }
        continue;
      }
      BoolMatrix lhs_fr = letter(f) * bit(r);
      if (tr->move == Move::kLeft) {
        for (Symbol b = 0; b < 2; ++b) {
          BoolMatrix big = bit(b) * lhs_fr;
          BoolMatrix small = letter(tr->next) * bit(b) * bit(tr->write);
          if (!small.LessEq(big)) {
            return Fail(7, std::string("left rule ") + StateLetter(f) + char('0' + r));
          }
        }
      } else {
        BoolMatrix small = bit(tr->write) * letter(tr->next);
        if (!small.LessEq(lhs_fr)) {
          return Fail(8, std::string("right rule ") + StateLetter(f) + char('0' + r));
        }
      }
    }
  }

  if (!(nfa.q0 * letter(0) * at).IsZero()) return Fail(9, "initial configuration accepted");
  return FarVerifyReport{true, 0, ""};
}

}  // namespace bbdec
