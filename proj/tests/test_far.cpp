#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <variant>

#include "bbdec/bool_matrix.hpp"
#include "bbdec/far_direct.hpp"
#include "bbdec/far_mitm.hpp"
#include "bbdec/nfa.hpp"
#include "bbdec/simulator.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace bbdec;

namespace {

BoolMatrix FromRows(std::vector<std::string> rows) {
  BoolMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == '1') m.Set(static_cast<int>(r), static_cast<int>(c));
    }
  }
  return m;
}

BoolMatrix RandomMatrix(bbtest::Rng& rng, int rows, int cols, double density = 0.3) {
  std::bernoulli_distribution bit(density);
  BoolMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (bit(rng)) m.Set(r, c);
    }
  }
  return m;
}

BooleanNfa ExampleNfa() {
  BooleanNfa nfa;
  nfa.size = 3;
  nfa.q0 = FromRows({"110"});
  nfa.a = FromRows({"001"});
  nfa.transitions['a'] = FromRows({"000", "110", "011"});
  nfa.transitions['b'] = FromRows({"101", "100", "001"});
  return nfa;
}

FarCertificate ExampleCertificate() {
  auto t = TransitionTable::Parse(bbtest::kFarMachine);
  for (int n = 1; n <= 4; ++n) {
    for (bool ltr : {true, false}) {
      auto r = DecideFarDirect(t, n, ltr);
      if (r.verdict == Verdict::kNonHalt) return *r.certificate;
    }
  }
  FAIL("no certificate for the example machine");
  return {};
}

FarCertificate CertificateFromSolution(const TransitionTable& t, int l, std::vector<int> delta) {
  DirectFarState st = SolveMinimalRightNfa(t, l, delta);
  FarCertificate c;
  c.machine = t.ToString();
  c.l = l;
  c.d = st.d;
  c.delta = delta;
  c.r0 = st.r0;
  c.r1 = st.r1;
  c.a = st.at.Transposed();
  c.s = BoolMatrix(1, st.d);
  c.s.Set(0, st.d - 1);
  return c;
}

std::vector<std::vector<int>> LibraryTables(int n) {
  std::vector<std::vector<int>> out;
  SearchDfa(n, [&](std::span<const int> p) {
    if (p.size() == static_cast<std::size_t>(2 * n)) {
      out.emplace_back(p.begin(), p.end());
      return CheckResult::kSkip;
    }
    return CheckResult::kMore;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TransitionTable> FarMachines() {
  std::vector<TransitionTable> out;
  for (const auto& code : bbtest::Corpus()) out.push_back(TransitionTable::Parse(code));
  bbtest::Rng rng(555);
  for (int i = 0; i < 40; ++i) out.push_back(bbtest::RandomMachineOneHalt(rng, 2 + i % 3));
  return out;
}

}  // namespace

TEST_CASE("boolean semiring laws") {
  bbtest::Rng rng(1);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> dim(1, 8);
    int a = dim(rng), b = dim(rng), c = dim(rng), e = dim(rng);
    BoolMatrix x = RandomMatrix(rng, a, b), y = RandomMatrix(rng, b, c), z = RandomMatrix(rng, c, e);
    CHECK((x * y) * z == x * (y * z));
    BoolMatrix y2 = RandomMatrix(rng, b, c);
    CHECK(x * (y + y2) == x * y + x * y2);
    BoolMatrix bigger = y + y2;
    CHECK(y.LessEq(bigger));
    CHECK((x * y).LessEq(x * bigger));
    CHECK((y * z).LessEq(bigger * z));
    CHECK(BoolMatrix::Identity(a) * x == x);
  }
}

TEST_CASE("multi-word rows behave like single-word rows") {
  bbtest::Rng rng(2);
  for (int iter = 0; iter < 20; ++iter) {
    BoolMatrix x = RandomMatrix(rng, 70, 130, 0.05), y = RandomMatrix(rng, 130, 65, 0.05);
    BoolMatrix p = x * y;
    for (int r = 0; r < 70; ++r) {
      for (int c = 0; c < 65; ++c) {
        bool v = false;
        for (int k = 0; k < 130 && !v; ++k) v = x.Get(r, k) && y.Get(k, c);
        REQUIRE(p.Get(r, c) == v);
      }
    }
    CHECK(x.Transposed().Transposed() == x);
  }
}

TEST_CASE("matrix text form") {
  BoolMatrix m = FromRows({"010", "001"});
  CHECK(m.ToString() == "010;001");
  CHECK(BoolMatrix::Basis(3, 1).ToString() == "010");
  CHECK_THROWS(FromRows({"01"}) + FromRows({"011"}));
}

TEST_CASE("example NFA words") {
  BooleanNfa nfa = ExampleNfa();
  for (const char* w : {"b", "ab", "aabb"}) CHECK(NfaAccepts(nfa, w));
  for (const char* w : {"a", "aa", "aaa"}) CHECK_FALSE(NfaAccepts(nfa, w));
  CHECK_FALSE(NfaAccepts(nfa, ""));
  CHECK_THROWS_AS(NfaAccepts(nfa, "c"), std::invalid_argument);
}

TEST_CASE("certificate NFA of the example machine") {
  FarCertificate cert = ExampleCertificate();
  CHECK(cert.left_to_right);
  CHECK(cert.l == 2);
  BooleanNfa nfa = AssembleBlockNfa(cert, 4);
  CHECK(NfaAccepts(nfa, "00A001100"));
  CHECK_FALSE(NfaAccepts(nfa, "A0"));

  // State sets after each symbol: DFA states by number, right states as DFA state and letter.
  auto name = [&](int j) -> std::string {
    if (j < cert.l) return std::to_string(j);
    int k = j - cert.l;
    if (k == cert.d - 1) return "_|_";
    return std::to_string(k / 4) + static_cast<char>('A' + k % 4);
  };
  std::vector<std::set<std::string>> expected = {
      {"0"},        {"0"},        {"0A"},
      {"1B"},       {"0B", "1B"}, {"1A", "0A"},
      {"0B", "1B", "_|_"},        {"1A", "0B", "1B", "_|_"},
      {"0B", "1A", "1B", "_|_"}};
  BoolMatrix v = nfa.q0;
  std::string word = "00A001100";
  for (std::size_t i = 0; i < word.size(); ++i) {
    v = v * nfa.T(word[i]);
    std::set<std::string> got;
    for (int j = 0; j < nfa.size; ++j) {
      if (v.Get(0, j)) got.insert(name(j));
    }
    CAPTURE(i);
    CHECK(got == expected[i]);
  }
}

TEST_CASE("accepted words stay accepted with trailing zeros") {
  FarCertificate cert = ExampleCertificate();
  BooleanNfa nfa = AssembleBlockNfa(cert, 4);
  bbtest::Rng rng(3);
  int accepted = 0;
  for (int i = 0; i < 500; ++i) {
    std::string w = bbtest::RandomWord(rng, 0, 6) + static_cast<char>('A' + rng() % 4) +
                    bbtest::RandomWord(rng, 1, 6);
    if (!NfaAccepts(nfa, w)) continue;
    ++accepted;
    CHECK(NfaAccepts(nfa, w + "0"));
    CHECK(NfaAccepts(nfa, "0" + w));
  }
  CHECK(accepted > 0);
}

TEST_CASE("verification failures name the condition") {
  FarCertificate cert = ExampleCertificate();
  CHECK(VerifyFarCertificate(cert).ok);

  FarCertificate zero = cert;
  zero.a = BoolMatrix(1, cert.d);
  FarVerifyReport r = VerifyFarCertificate(zero);
  CHECK_FALSE(r.ok);
  CHECK(r.failed_condition == 4);

  auto instant = TransitionTable::Parse(bbtest::kHaltAtOnce);
  FarCertificate start = CertificateFromSolution(instant, 1, {0, 0});
  r = VerifyFarCertificate(start);
  CHECK_FALSE(r.ok);
  CHECK(r.failed_condition == 9);

  bool mutated = false;
  for (int x = 0; x < cert.d && !mutated; ++x) {
    for (int y = 0; y < cert.d && !mutated; ++y) {
      if (!cert.r0.Get(x, y)) continue;
      FarCertificate m = cert;
      m.r0.Set(x, y, false);
      r = VerifyFarCertificate(m);
      CHECK_FALSE(r.ok);
      CHECK(r.failed_condition >= 2);
      CHECK_FALSE(r.detail.empty());
      mutated = true;
    }
  }
  CHECK(mutated);

  FarCertificate wrong_shape = cert;
  wrong_shape.r1 = BoolMatrix(cert.d + 1, cert.d + 1);
  CHECK_THROWS(VerifyFarCertificate(wrong_shape));
}

TEST_CASE("canonical DFA enumeration equals the brute-force filter") {
  CHECK(LibraryTables(1) == std::vector<std::vector<int>>{{0, 0}});
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(LibraryTables(n) == bbtest::BruteForceCanonicalTables(n));
    std::map<std::size_t, std::set<std::vector<int>>> prefixes;
    SearchDfa(n, [&](std::span<const int> p) {
      CHECK(prefixes[p.size()].emplace(p.begin(), p.end()).second);
      return p.size() == static_cast<std::size_t>(2 * n) ? CheckResult::kSkip : CheckResult::kMore;
    });
    for (const auto& [len, set] : prefixes) {
      CAPTURE(len);
      CHECK(set == bbtest::BruteForceCanonicalPrefixes(n, len));
    }
  }
}

TEST_CASE("search stops early and reports the table") {
  int calls = 0;
  std::size_t first_len = 0;
  CHECK_FALSE(SearchDfa(3, [&](std::span<const int> p) {
    if (calls++ == 0) first_len = p.size();
    CHECK(p.size() == first_len);
    return CheckResult::kSkip;
  }));
  CHECK(static_cast<std::size_t>(calls) == bbtest::BruteForceCanonicalPrefixes(3, first_len).size());

  std::vector<int> found;
  CHECK(SearchDfa(
      2,
      [](std::span<const int> p) { return p.size() == 4 ? CheckResult::kStop : CheckResult::kMore; },
      &found));
  CHECK(found == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("left-only machine keeps only the steady entry") {
  auto t = TransitionTable::Parse("1LA1LA");
  DirectFarState st = SolveMinimalRightNfa(t, 1, std::vector<int>{0, 0});
  REQUIRE(st.d == 2);
  CHECK(st.r0.ToString() == "00;01");
  CHECK(st.r1.ToString() == "00;01");
  CHECK(st.at.ToString() == "0;1");
}

TEST_CASE("minimal right NFA matches Kleene iteration") {
  auto far = TransitionTable::Parse(bbtest::kFarMachine);
  FarCertificate cert = ExampleCertificate();
  std::vector<std::pair<TransitionTable, std::vector<int>>> cases = {{far, cert.delta}};
  bbtest::Rng rng(4);
  for (int i = 0; i < 60; ++i) {
    int l = 1 + i % 3;
    auto tables = bbtest::BruteForceCanonicalTables(l);
    cases.emplace_back(bbtest::RandomMachine(rng, 2 + i % 4, 0.15), tables[rng() % tables.size()]);
  }
  for (const auto& [t, delta] : cases) {
    int l = static_cast<int>(delta.size()) / 2;
    CAPTURE(t.ToString());
    for (std::size_t k = 1; k <= delta.size(); ++k) {
      std::span<const int> prefix(delta.data(), k);
      DirectFarState st = SolveMinimalRightNfa(t, l, prefix);
      auto oracle = bbtest::KleeneLeastSolution(t, l, prefix);
      CHECK(st.r0 == oracle.r0);
      CHECK(st.r1 == oracle.r1);
      CHECK(st.at == oracle.at);
    }
  }
}

TEST_CASE("extending delta never clears a bit") {
  bbtest::Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    auto t = bbtest::RandomMachine(rng, 3, 0.15);
    auto tables = bbtest::BruteForceCanonicalTables(3);
    const auto& delta = tables[rng() % tables.size()];
    DirectFarState prev = SolveMinimalRightNfa(t, 3, std::span<const int>(delta.data(), 1));
    for (std::size_t k = 2; k <= delta.size(); ++k) {
      DirectFarState next = SolveMinimalRightNfa(t, 3, std::span<const int>(delta.data(), k));
      CHECK(prev.r0.LessEq(next.r0));
      CHECK(prev.r1.LessEq(next.r1));
      CHECK(prev.at.LessEq(next.at));
      prev = next;
    }
  }
}

TEST_CASE("minimal solution lies below every solution") {
  std::vector<TransitionTable> machines;
  bbtest::Rng rng(6);
  for (int i = 0; i < 8; ++i) machines.push_back(bbtest::RandomMachine(rng, 1, 0.3));
  for (int i = 0; i < 12; ++i) machines.push_back(bbtest::RandomMachine(rng, 2, 0.3));
  std::vector<int> delta = {0, 0};
  for (const auto& t : machines) {
    CAPTURE(t.ToString());
    DirectFarState st = SolveMinimalRightNfa(t, 1, delta);
    CHECK(bbtest::SatisfiesRightSystem(t, 1, delta, st.r0, st.r1));
    auto all = bbtest::AllRightSolutions(t, 1, delta);
    REQUIRE_FALSE(all.empty());
    for (const auto& [r0, r1] : all) {
      CHECK(st.r0.LessEq(r0));
      CHECK(st.r1.LessEq(r1));
    }
  }
}

TEST_CASE("partial checks") {
  auto instant = TransitionTable::Parse("---1RA_1LA1LB");
  DirectFarSolver halting(instant, 2);
  std::vector<int> prefix = {0};
  CHECK(halting.Check(prefix) == CheckResult::kSkip);

  auto far = TransitionTable::Parse(bbtest::kFarMachine);
  FarCertificate cert = ExampleCertificate();
  DirectFarSolver solver(far, cert.l);
  for (std::size_t k = 1; k <= cert.delta.size(); ++k) {
    CheckResult r = solver.Check(std::span<const int>(cert.delta.data(), k));
    CHECK(r == (k == cert.delta.size() ? CheckResult::kStop : CheckResult::kMore));
  }
}

TEST_CASE("direct FAR examples") {
  auto far = TransitionTable::Parse(bbtest::kFarMachine);
  auto start = std::chrono::steady_clock::now();
  FarCertificate cert = ExampleCertificate();
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
  CHECK(VerifyFarCertificate(cert).ok);
  CHECK(VerifyFarNfa(ScannedTable(cert), AssembleBlockNfa(cert, 4)).ok);

  auto champ = TransitionTable::Parse(bbtest::kChampion);
  for (int n = 1; n <= 3; ++n) {
    CHECK(DecideFarDirect(champ, n, true).verdict == Verdict::kUnknown);
    CHECK(DecideFarDirect(champ, n, false).verdict == Verdict::kUnknown);
  }
  auto instant = TransitionTable::Parse(bbtest::kHaltAtOnce);
  CHECK(DecideFarDirect(instant, 1, true).verdict == Verdict::kUnknown);

  auto delta_cert = FarCertificateForDelta(far, cert.delta, true);
  REQUIRE(delta_cert);
  CHECK(delta_cert->r0 == cert.r0);
  CHECK_FALSE(FarCertificateForDelta(champ, std::vector<int>{0, 1, 0, 0}, true));
}

TEST_CASE("every direct FAR verdict verifies and is sound") {
  int decided = 0;
  for (const auto& t : FarMachines()) {
    for (int n = 1; n <= 2; ++n) {
      for (bool ltr : {true, false}) {
        auto r = DecideFarDirect(t, n, ltr);
        if (r.verdict != Verdict::kNonHalt) continue;
        CAPTURE(t.ToString());
        ++decided;
        REQUIRE(r.certificate);
        CHECK(r.certificate->left_to_right == ltr);
        CHECK(VerifyFarCertificate(*r.certificate).ok);
        CHECK_FALSE(std::holds_alternative<Halted>(Simulate(t, 1'000'000)));
      }
    }
  }
  CHECK(decided > 5);
}

TEST_CASE("MitM encoding shape") {
  auto far = TransitionTable::Parse(bbtest::kFarMachine);
  MitmInstance one = EncodeMitmCnf(far, 1);
  for (const Term& t : one.tk_eq) CHECK(t.IsConst());

  bbtest::Rng rng(7);
  std::vector<TransitionTable> machines = {far, TransitionTable::Parse(bbtest::kChampion)};
  for (int i = 0; i < 10; ++i) machines.push_back(bbtest::RandomMachine(rng, 3, 0.2));
  for (const auto& t : machines) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(t.ToString());
      CAPTURE(n);
      MitmInstance inst = EncodeMitmCnf(t, n);
      CHECK(inst.template_clauses == bbtest::MitmTemplateClauseCount(t, n));
      CHECK(inst.A(0, 0, 0, 0).kind == Term::Kind::kFalse);
      for (const auto& clause : inst.cnf.clauses) {
        for (int lit : clause) CHECK((lit != 0 && std::abs(lit) <= inst.cnf.num_vars));
      }
    }
  }

  MitmInstance two = EncodeMitmCnf(far, 2);
  std::set<int> units;
  for (const auto& clause : two.cnf.clauses) {
    if (clause.size() == 1) units.insert(clause[0]);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Term a = two.A(i, 3, 0, j);
      CHECK((a.kind == Term::Kind::kTrue || (a.kind == Term::Kind::kVar && units.count(a.var) == 1)));
    }
  }
  CHECK_THROWS(EncodeMitmCnf(far, 0));
}

TEST_CASE("MitM satisfiability agrees with brute-force DFA pairs") {
  bbtest::Rng rng(8);
  std::vector<TransitionTable> machines;
  for (const auto& code : {bbtest::kFarMachine, bbtest::kSegmentMachine, bbtest::kPureCycler,
                           bbtest::kRunaway, bbtest::kBouncer}) {
    machines.push_back(TransitionTable::Parse(code));
  }
  for (int i = 0; i < 80; ++i) machines.push_back(bbtest::RandomMachine(rng, 2 + i % 3, 0.2));
  int sat_count = 0;
  for (const auto& t : machines) {
    for (int n = 1; n <= 3; ++n) {
      if (n == 3 && t.num_states() > 2) continue;
      CAPTURE(t.ToString());
      CAPTURE(n);
      MitmInstance inst = EncodeMitmCnf(t, n);
      SatResult sat = inst.trivially_unsat ? SatResult{} : SolveCnf(inst.cnf);
      CHECK(sat.satisfiable == bbtest::BruteForceMitm(t, n));
      if (!sat.satisfiable) continue;
      ++sat_count;
      auto left = inst.ExtractDelta(0, sat.assignment);
      auto right = inst.ExtractDelta(1, sat.assignment);
      auto tables = bbtest::BruteForceCanonicalTables(n);
      CHECK(std::binary_search(tables.begin(), tables.end(), left));
      CHECK(std::binary_search(tables.begin(), tables.end(), right));
      CHECK(bbtest::MitmPairRejectsStart(t, n, left, right));
    }
  }
  CHECK(sat_count > 5);
}

TEST_CASE("MitM decides the example machine") {
  auto far = TransitionTable::Parse(bbtest::kFarMachine);
  int first = 0;
  for (int n = 1; n <= 8 && !first; ++n) {
    auto r = DecideFarMitm(far, n);
    if (r.verdict != Verdict::kNonHalt) continue;
    first = n;
    REQUIRE(r.certificate);
    CHECK(VerifyFarCertificate(*r.certificate).ok);
  }
  CHECK(first == 6);
  CHECK(DecideFarMitm(TransitionTable::Parse(bbtest::kChampion), 1).verdict == Verdict::kUnknown);
  CHECK(DecideFarMitm(TransitionTable::Parse(bbtest::kChampion), 3).verdict == Verdict::kUnknown);
}

TEST_CASE("MitM at n = 1 is mostly unsatisfiable") {
  bbtest::Rng rng(9);
  int unknown = 0;
  for (int i = 0; i < 50; ++i) {
    auto t = bbtest::RandomMachineOneHalt(rng, 5);
    if (DecideFarMitm(t, 1).verdict == Verdict::kUnknown) ++unknown;
  }
  CHECK(unknown > 25);
}
