#include <doctest.h>

#include "bbdec/loops.hpp"
#include "bbdec/simulator.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace bbdec;

namespace {

std::vector<TransitionTable> LoopMachines() {
  std::vector<TransitionTable> out;
  for (const auto& code : bbtest::Corpus()) out.push_back(TransitionTable::Parse(code));
  bbtest::Rng rng(99);
  for (int i = 0; i < 150; ++i) out.push_back(bbtest::RandomMachine(rng, 2 + i % 3, 0.15));
  return out;
}

Configuration After(const TransitionTable& t, std::uint64_t steps) {
  Simulator sim(t);
  for (std::uint64_t i = 0; i < steps; ++i) REQUIRE(sim.Step());
  return sim.ToConfiguration();
}

const RecordBreakingConfiguration& RecordAt(const std::vector<RecordBreakingConfiguration>& rs,
                                            std::uint64_t step) {
  for (const auto& r : rs) {
    if (r.step == step) return r;
  }
  FAIL("no record at step " << step);
  return rs.front();
}

}  // namespace

TEST_CASE("cyclers examples") {
  auto r = DecideCyclers(TransitionTable::Parse(bbtest::kPureCycler), 10);
  CHECK(r.verdict == Verdict::kNonHalt);
  CHECK(r.first_seen == 0);
  CHECK(r.repeated_at == 2);

  auto h = DecideCyclers(TransitionTable::Parse(bbtest::kHaltAtOnce), 10);
  CHECK(h.verdict == Verdict::kHalt);
  CHECK(h.halt_step == 1);

  CHECK(DecideCyclers(TransitionTable::Parse(bbtest::kChampion), 1000).verdict ==
        Verdict::kUnknown);
}

TEST_CASE("cyclers agree with the stored-configuration oracle") {
  for (const auto& t : LoopMachines()) {
    CAPTURE(t.ToString());
    auto r = DecideCyclers(t, 200);
    auto o = bbtest::StoredConfigurationCycler(t, 200);
    if (o.halted) {
      CHECK(r.verdict == Verdict::kHalt);
      CHECK(r.halt_step == o.halt_step);
    } else if (o.repeated) {
      REQUIRE(r.verdict == Verdict::kNonHalt);
      CHECK(r.first_seen == o.first);
      CHECK(r.repeated_at == o.second);
    } else {
      CHECK(r.verdict == Verdict::kUnknown);
    }
  }
}

TEST_CASE("cycler witnesses replay and are stable under larger limits") {
  for (const auto& t : LoopMachines()) {
    auto r = DecideCyclers(t, 300);
    if (r.verdict != Verdict::kNonHalt) continue;
    CAPTURE(t.ToString());
    Configuration a = After(t, r.first_seen);
    Configuration b = After(t, r.repeated_at);
    CHECK(a.state == b.state);
    CHECK(a.head == b.head);
    CHECK(a.tape == b.tape);
    for (std::uint64_t limit : {r.repeated_at, r.repeated_at + 1, 2 * r.repeated_at + 50}) {
      auto again = DecideCyclers(t, limit);
      CHECK(again.verdict == Verdict::kNonHalt);
      CHECK(again.first_seen == r.first_seen);
      CHECK(again.repeated_at == r.repeated_at);
    }
  }
}

TEST_CASE("cyclers give up past the memory cap") {
  auto r = DecideCyclers(TransitionTable::Parse(bbtest::kRunaway), 1000, 10);
  CHECK(r.verdict == Verdict::kUnknown);
}

TEST_CASE("distance L examples") {
  auto runaway = TransitionTable::Parse(bbtest::kRunaway);
  auto rs = bbtest::ReplayRecords(runaway, 5);
  REQUIRE(rs.size() == 5);
  CHECK(ComputeDistanceL(rs[1], rs[0]) == 0);
  CHECK(CheckRecordPair(rs[1], rs[0]));

  // A0 1RB, B0 1LC, C1 1RD, D1 1RA: right records at steps 1 and 4 with one step back between.
  auto zigzag = TransitionTable::Parse("1RB---_1LC---_---1RD_---1RA");
  auto zs = bbtest::ReplayRecords(zigzag, 4);
  const auto& first = RecordAt(zs, 1);
  const auto& second = RecordAt(zs, 4);
  CHECK(ComputeDistanceL(second, first) == 1);
  CHECK(bbtest::ReplayDistance(bbtest::HeadTrace(zigzag, 4), 1, 4, Side::kRight) == 1);
}

TEST_CASE("distance L matches a replay of the head trace") {
  std::vector<TransitionTable> machines = LoopMachines();
  for (const auto& t : machines) {
    CAPTURE(t.ToString());
    auto records = bbtest::ReplayRecords(t, 300);
    auto trace = bbtest::HeadTrace(t, 300);
    for (std::size_t i = 0; i < records.size(); ++i) {
      for (std::size_t j = i + 1; j < records.size() && j < i + 12; ++j) {
        if (records[i].side != records[j].side) continue;
        CHECK(ComputeDistanceL(records[j], records[i]) ==
              bbtest::ReplayDistance(trace, records[i].step, records[j].step, records[i].side));
      }
    }
  }
}

TEST_CASE("bouncer D records: distance equals the left excursion") {
  auto t = TransitionTable::Parse(bbtest::kBouncer);
  auto records = bbtest::ReplayRecords(t, 400);
  auto trace = bbtest::HeadTrace(t, 400);
  std::vector<const RecordBreakingConfiguration*> d_right;
  for (const auto& r : records) {
    if (r.side == Side::kRight && r.state == 3) d_right.push_back(&r);
  }
  REQUIRE(d_right.size() >= 2);
  std::int64_t distance = ComputeDistanceL(*d_right[1], *d_right[0]);
  CHECK(distance == bbtest::ReplayDistance(trace, d_right[0]->step, d_right[1]->step, Side::kRight));
  CHECK(distance > 0);
}

TEST_CASE("record pair with a differing cell") {
  RecordBreakingConfiguration older;
  older.step = 10;
  older.side = Side::kRight;
  older.head = 3;
  older.lo = 0;
  older.values = {0, 1, 1, 0};
  older.last_visit = {2, 8, 9, 10};
  RecordBreakingConfiguration current = older;
  current.step = 20;
  current.head = 4;
  current.values = {0, 1, 1, 0, 0};
  current.last_visit = {2, 8, 15, 19, 20};
  CHECK(ComputeDistanceL(current, older) == 1);
  CHECK_FALSE(CheckRecordPair(current, older));
  current.values = {0, 1, 1, 1, 0};
  CHECK(CheckRecordPair(current, older));
}

TEST_CASE("translated cyclers examples") {
  auto r = DecideTranslatedCyclers(TransitionTable::Parse(bbtest::kRunaway), 10);
  CHECK(r.verdict == Verdict::kNonHalt);
  CHECK(r.older_step == 1);
  CHECK(r.current_step == 2);
  CHECK(r.distance == 0);
  CHECK(DecideTranslatedCyclers(TransitionTable::Parse(bbtest::kChampion), 1000).verdict ==
        Verdict::kUnknown);
  for (std::uint64_t limit : {10, 100, 1000}) {
    CHECK(DecideTranslatedCyclers(TransitionTable::Parse(bbtest::kPureCycler), limit).verdict ==
          Verdict::kUnknown);
  }
  CHECK(DecideTranslatedCyclers(TransitionTable::Parse(bbtest::kHaltAtOnce), 10).verdict ==
        Verdict::kHalt);
}

TEST_CASE("translated cycler witnesses repeat once more") {
  int decided = 0;
  for (const auto& t : LoopMachines()) {
    auto r = DecideTranslatedCyclers(t, 2000);
    if (r.verdict != Verdict::kNonHalt) continue;
    CAPTURE(t.ToString());
    ++decided;
    std::uint64_t period = r.current_step - r.older_step;
    std::uint64_t third = r.current_step + period;
    auto records = bbtest::ReplayRecords(t, third);
    const auto& r2 = RecordAt(records, r.current_step);
    const auto& r3 = RecordAt(records, third);
    CHECK(r3.state == r2.state);
    CHECK(r3.side == r2.side);
    std::int64_t dir = r2.side == Side::kRight ? -1 : 1;
    for (std::int64_t k = 0; k <= r.distance; ++k) {
      CHECK(r3.ValueAt(r3.head + dir * k) == r2.ValueAt(r2.head + dir * k));
    }
    CHECK(std::holds_alternative<RunningAtLimit>(Simulate(t, 100000)));
    auto again = DecideTranslatedCyclers(t, 4000);
    CHECK(again.verdict == Verdict::kNonHalt);
    CHECK(again.older_step == r.older_step);
    CHECK(again.current_step == r.current_step);
  }
  CHECK(decided > 5);
}
