#include <doctest.h>

#include <variant>

#include "bbdec/backward.hpp"
#include "bbdec/simulator.hpp"
#include "support/corpus.hpp"

using namespace bbdec;

TEST_CASE("backward steps from the halting configuration") {
  auto t = TransitionTable::Parse(bbtest::kBackwardMachine);
  PartialConfiguration halt{2, 0, {{0, 0}}, 1};

  SourcedTransition b0{1, 0, *t.Get(1, 0)};
  auto prev = ApplyTransitionBackwards(halt, b0);
  REQUIRE(prev);
  CHECK(prev->state == 1);
  CHECK(prev->head == 1);
  CHECK(prev->tape == std::map<std::int64_t, Symbol>{{0, 0}, {1, 0}});
  CHECK(prev->depth == 2);

  SourcedTransition a0{0, 0, *t.Get(0, 0)};
  CHECK_FALSE(ApplyTransitionBackwards(*prev, a0));
}

TEST_CASE("writing the constrained value succeeds and restores the read symbol") {
  PartialConfiguration conf{1, 5, {{4, 1}}, 3};
  SourcedTransition t{0, 0, Transition{1, Move::kRight, 1}};
  auto prev = ApplyTransitionBackwards(conf, t);
  REQUIRE(prev);
  CHECK(prev->head == 4);
  CHECK(prev->tape.at(4) == 0);
  CHECK(prev->depth == 4);
}

TEST_CASE("decide backward examples") {
  auto t = TransitionTable::Parse(bbtest::kBackwardMachine);
  CHECK(DecideBackward(t, 3).verdict == Verdict::kNonHalt);
  CHECK(DecideBackward(t, 1).verdict == Verdict::kUnknown);

  auto champ = TransitionTable::Parse(bbtest::kChampion);
  for (int depth = 0; depth <= 20; ++depth) {
    CAPTURE(depth);
    CHECK(DecideBackward(champ, depth).verdict == Verdict::kUnknown);
  }

  auto no_halt = TransitionTable::Parse("1RB1LA_1LA1RB");
  CHECK(DecideBackward(no_halt, 10).verdict == Verdict::kUnknown);
}

TEST_CASE("backward never refutes a machine that halts after the depth") {
  bbtest::Rng rng(314);
  int halting = 0;
  std::vector<TransitionTable> machines;
  for (const auto& code : bbtest::Corpus()) machines.push_back(TransitionTable::Parse(code));
  for (int i = 0; i < 200; ++i) machines.push_back(bbtest::RandomMachineOneHalt(rng, 2 + i % 4));
  for (const auto& t : machines) {
    auto outcome = Simulate(t, 1'000'000);
    if (!std::holds_alternative<Halted>(outcome)) continue;
    ++halting;
    std::uint64_t halt_step = std::get<Halted>(outcome).step;
    CAPTURE(t.ToString());
    for (int depth = 1; depth <= 12; ++depth) {
      auto r = DecideBackward(t, depth);
      CHECK_FALSE((r.verdict == Verdict::kNonHalt && halt_step > static_cast<std::uint64_t>(depth)));
    }
  }
  CHECK(halting > 20);
}

TEST_CASE("backward search is deterministic") {
  bbtest::Rng rng(2718);
  for (int i = 0; i < 40; ++i) {
    auto t = bbtest::RandomMachineOneHalt(rng, 4);
    auto a = DecideBackward(t, 8);
    auto b = DecideBackward(t, 8);
    CHECK(a.verdict == b.verdict);
    CHECK(a.nodes == b.nodes);
    CHECK(a.max_depth_reached == b.max_depth_reached);
  }
}

TEST_CASE("node budget gives unknown") {
  auto champ = TransitionTable::Parse(bbtest::kChampion);
  auto r = DecideBackward(champ, 200, 50);
  CHECK(r.verdict == Verdict::kUnknown);
}
