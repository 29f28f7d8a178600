#include <doctest.h>

#include <set>
#include <variant>

#include "bbdec/halting_segment.hpp"
#include "bbdec/simulator.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace bbdec;

namespace {

std::set<std::string> Children(const TransitionTable& t, int n, const SegmentConfiguration& node) {
  std::set<std::string> out;
  for (const auto& c : ExpandNode(t, n, node)) out.insert(c.ToString(n));
  return out;
}

SegmentConfiguration Node(State state, std::uint64_t segment, int pos) {
  SegmentConfiguration c;
  c.state = state;
  c.segment = segment;
  c.pos = pos;
  return c;
}

std::vector<TransitionTable> SegmentMachines() {
  std::vector<TransitionTable> out;
  for (const auto& code : bbtest::Corpus()) out.push_back(TransitionTable::Parse(code));
  bbtest::Rng rng(4242);
  for (int i = 0; i < 60; ++i) out.push_back(bbtest::RandomMachineOneHalt(rng, 2 + i % 3));
  for (int i = 0; i < 30; ++i) out.push_back(bbtest::RandomMachine(rng, 3, 0.25));
  return out;
}

}  // namespace

TEST_CASE("segment node text") {
  CHECK(Node(0, 0, 0).ToString(2) == "A - [0] 0 -");
  SegmentConfiguration bottom = Node(kBottom, 0, -1);
  bottom.halt_state = 2;
  bottom.halt_read = 1;
  CHECK(bottom.ToString(2) == "_|_ C1 [-] 0 0 -");
  CHECK(Node(1, 0b10, 2).ToString(2) == "B - 0 1 [-]");
}

TEST_CASE("expand node examples") {
  auto t = TransitionTable::Parse(bbtest::kSegmentMachine);
  CHECK(Children(t, 2, Node(0, 0, -1)) ==
        std::set<std::string>{"B [-] 0 0 -", "B - [0] 0 -", "C [-] 0 0 -", "C - [0] 0 -"});
  CHECK(Children(t, 2, Node(0, 0, 0)) == std::set<std::string>{"B - 1 [0] -"});
  CHECK(Children(t, 2, Node(2, 0, -1)).count("_|_ C1 [-] 0 0 -") == 1);
  CHECK_THROWS(ExpandNode(t, 2, Node(kBottom, 0, 0)));
}

TEST_CASE("writes outside the segment are dropped") {
  auto t = TransitionTable::Parse("1LA1LA");
  auto children = ExpandNode(t, 2, Node(0, 0, 2));
  for (const auto& c : children) CHECK(c.segment == 0);
  CHECK(Children(t, 2, Node(0, 0, 2)) == std::set<std::string>{"A - 0 0 [-]", "A - 0 [0] -"});
}

TEST_CASE("decide halting segment examples") {
  auto r = DecideHaltingSegment(TransitionTable::Parse(bbtest::kSegmentMachine), 2);
  CHECK(r.verdict == Verdict::kNonHalt);
  CHECK(r.uncovered == std::vector<HaltingPosition>{{2, 1, 0}, {2, 1, 1}});

  auto resistant = TransitionTable::Parse(bbtest::kSegmentResistant);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(DecideHaltingSegment(resistant, n).verdict == Verdict::kUnknown);
  }
  CHECK(DecideHaltingSegment(TransitionTable::Parse(bbtest::kChampion), 2).verdict ==
        Verdict::kUnknown);
  CHECK_THROWS(DecideHaltingSegment(resistant, 0));
  CHECK_THROWS(DecideHaltingSegment(resistant, kMaxSegmentSize + 1));
}

TEST_CASE("forward closure matches the brute-force BFS for n <= 3") {
  for (const auto& t : SegmentMachines()) {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(t.ToString());
      CAPTURE(n);
      auto r = DecideHaltingSegment(t, n);
      auto o = bbtest::SegmentBfs(t, n);
      CHECK(r.nodes == o.nodes);
      std::vector<HaltingPosition> missing;
      bool covered_some = false;
      for (State s = 0; s < t.num_states(); ++s) {
        for (Symbol rd = 0; rd < 2; ++rd) {
          if (!t.IsHalting(s, rd)) continue;
          std::vector<HaltingPosition> here;
          for (int p = -1; p <= n; ++p) {
            if (!o.halting.count({s, rd, p})) here.push_back({s, rd, p});
          }
          if (here.empty()) covered_some = true;
          missing.insert(missing.end(), here.begin(), here.end());
        }
      }
      CHECK(r.verdict == (covered_some ? Verdict::kUnknown : Verdict::kNonHalt));
      if (!covered_some) CHECK(r.uncovered == missing);
    }
  }
}

TEST_CASE("graph size stays within the node bound") {
  for (const auto& t : SegmentMachines()) {
    int h = t.CountUndefined();
    for (int n = 1; n <= 10; ++n) {
      auto r = DecideHaltingSegment(t, n, std::uint64_t{1} << 40);
      std::uint64_t cells = (std::uint64_t{1} << n) * static_cast<std::uint64_t>(n + 2);
      CHECK(r.nodes <= cells * static_cast<std::uint64_t>(t.num_states() + h));
    }
  }
}

TEST_CASE("halting machines are never refuted") {
  int halting = 0;
  for (const auto& t : SegmentMachines()) {
    auto outcome = Simulate(t, 1'000'000);
    if (!std::holds_alternative<Halted>(outcome)) continue;
    ++halting;
    CAPTURE(t.ToString());
    for (int n = 1; n <= 6; ++n) CHECK(DecideHaltingSegment(t, n).verdict != Verdict::kNonHalt);
  }
  CHECK(halting > 10);
}

TEST_CASE("node budget gives unknown") {
  auto r = DecideHaltingSegment(TransitionTable::Parse(bbtest::kSegmentMachine), 6, 5);
  CHECK(r.verdict == Verdict::kUnknown);
}
