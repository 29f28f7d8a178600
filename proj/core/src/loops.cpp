#include "bbdec/loops.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <unordered_map>

#include "bbdec/simulator.hpp"

namespace bbdec {

namespace {

// State, absolute head and trimmed tape packed into one string.
std::string ConfigurationKey(const Simulator& sim) {
  std::int64_t lo = sim.leftmost();
  std::int64_t hi = sim.rightmost();
  while (lo <= hi && sim.Read(lo) == 0) ++lo;
  while (hi >= lo && sim.Read(hi) == 0) --hi;
  std::string key;
  key.reserve(20 + static_cast<std::size_t>(std::max<std::int64_t>(0, hi - lo + 1)));
  auto put = [&key](std::int64_t v) {
    char buf[sizeof v];
    std::memcpy(buf, &v, sizeof v);
    key.append(buf, sizeof v);
  };
  key.push_back(static_cast<char>(sim.state()));
  put(sim.head());
  put(lo <= hi ? lo : 0);
  for (std::int64_t p = lo; p <= hi; ++p) key.push_back(static_cast<char>('0' + sim.Read(p)));
  return key;
}

}  // namespace

CyclerResult DecideCyclers(const TransitionTable& table, std::uint64_t time_limit,
                           std::size_t max_configurations) {
  CyclerResult result;
  Simulator sim(table);
  std::unordered_map<std::string, std::uint64_t> seen;
  std::uint64_t t = 0;
  while (t <= time_limit) {
    auto [it, inserted] = seen.emplace(ConfigurationKey(sim), t);
    if (!inserted) {
      result.verdict = Verdict::kNonHalt;
      result.first_seen = it->second;
      result.repeated_at = t;
      return result;
    }
    if (seen.size() > max_configurations) return result;
    if (!sim.Step()) {
      result.verdict = Verdict::kHalt;
      result.halt_step = sim.steps();
      return result;
    }
    ++t;
  }
  return result;
}

std::uint8_t RecordBreakingConfiguration::ValueAt(std::int64_t pos) const {
  std::int64_t idx = pos - lo;
  if (idx < 0 || idx >= static_cast<std::int64_t>(values.size())) return 0;
  return values[idx];
}

std::int64_t RecordBreakingConfiguration::LastVisitAt(std::int64_t pos) const {
  std::int64_t idx = pos - lo;
  if (idx < 0 || idx >= static_cast<std::int64_t>(last_visit.size())) return -1;
  return last_visit[idx];
}

std::int64_t ComputeDistanceL(const RecordBreakingConfiguration& current,
                              const RecordBreakingConfiguration& older) {
  std::int64_t older_pos = older.head;
  std::int64_t older_time = older.LastVisitAt(older_pos);
  std::int64_t current_time = current.LastVisitAt(current.head);
  std::int64_t distance = 0;
  for (std::size_t i = 0; i < current.last_visit.size(); ++i) {
    std::int64_t pos = current.lo + static_cast<std::int64_t>(i);
    if (current.side == Side::kRight && pos > older_pos) continue;
    if (current.side == Side::kLeft && pos < older_pos) continue;
    std::int64_t visited = current.last_visit[i];
    if (visited >= older_time && visited <= current_time) {
      distance = std::max(distance, std::abs(pos - older_pos));
    }
  }
  return distance;
}

namespace {

std::int64_t ExtremePosition(const RecordBreakingConfiguration& r) {
  return r.side == Side::kRight ? r.lo + static_cast<std::int64_t>(r.values.size()) - 1 : r.lo;
}

}  // namespace

bool CheckRecordPair(const RecordBreakingConfiguration& current,
                     const RecordBreakingConfiguration& older) {
  std::int64_t distance = ComputeDistanceL(current, older);
  std::int64_t current_extreme = ExtremePosition(current);
  std::int64_t older_extreme = ExtremePosition(older);
  std::int64_t step = current.side == Side::kRight ? -1 : 1;
  for (std::int64_t offset = 0; std::abs(offset) <= distance; offset += step) {
    if (current.ValueAt(current_extreme + offset) != older.ValueAt(older_extreme + offset)) {
      return false;
    }
  }
  return true;
}

namespace {

RecordBreakingConfiguration Snapshot(const Simulator& sim, Side side) {
  RecordBreakingConfiguration r;
  r.step = sim.steps();
  r.side = side;
  r.state = sim.state();
  r.head = sim.head();
  r.lo = sim.leftmost();
  std::size_t width = static_cast<std::size_t>(sim.rightmost() - sim.leftmost() + 1);
  r.values.resize(width);
  r.last_visit.resize(width);
  for (std::size_t i = 0; i < width; ++i) {
    std::int64_t pos = r.lo + static_cast<std::int64_t>(i);
    r.values[i] = sim.Read(pos);
    r.last_visit[i] = sim.LastVisit(pos);
  }
  return r;
}

}  // namespace

TranslatedCyclerResult DecideTranslatedCyclers(const TransitionTable& table,
                                               std::uint64_t time_limit) {
  TranslatedCyclerResult result;
  Simulator sim(table, /*track_last_visit=*/true);
  std::vector<RecordBreakingConfiguration> records[2];
  std::int64_t extreme[2] = {0, 0};
  while (sim.steps() < time_limit) {
    std::int64_t head = sim.head();
    if (head > extreme[0] || head < extreme[1]) {
      Side side = head > extreme[0] ? Side::kRight : Side::kLeft;
      int idx = side == Side::kRight ? 0 : 1;
      extreme[idx] = head;
      RecordBreakingConfiguration current = Snapshot(sim, side);
      for (const auto& older : records[idx]) {
        if (older.state != current.state) continue;
        if (CheckRecordPair(current, older)) {
          result.verdict = Verdict::kNonHalt;
          result.older_step = older.step;
          result.current_step = current.step;
          result.side = side;
          result.distance = ComputeDistanceL(current, older);
          return result;
        }
      }
      records[idx].push_back(std::move(current));
    }
    if (!sim.Step()) {
      result.verdict = Verdict::kHalt;
      result.halt_step = sim.steps();
      return result;
    }
  }
  return result;
}

}  // namespace bbdec
