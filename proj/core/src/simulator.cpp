#include "bbdec/simulator.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbdec {

Symbol Configuration::Read(std::int64_t pos) const {
  auto it = tape.find(pos);
  return it == tape.end() ? 0 : it->second;
}

void Configuration::Write(std::int64_t pos, Symbol s) {
  if (s == 0) {
    tape.erase(pos);
  } else {
    tape[pos] = s;
  }
}

std::optional<Configuration> MachineStep(const TransitionTable& table, const Configuration& c) {
  const auto& t = table.Get(c.state, c.Read(c.head));
  if (!t) return std::nullopt;
  Configuration next = c;
  next.Write(c.head, t->write);
  next.head += t->move == Move::kLeft ? -1 : 1;
  next.state = t->next;
  next.leftmost = std::min(next.leftmost, next.head);
  next.rightmost = std::max(next.rightmost, next.head);
  return next;
}

namespace {
constexpr std::int64_t kInitialWidth = 64;
}

Simulator::Simulator(const TransitionTable& table, bool track_last_visit)
    : table_(table),
      track_last_visit_(track_last_visit),
      cells_(kInitialWidth, 0),
      offset_(kInitialWidth / 2) {
  if (track_last_visit_) {
    last_visit_.assign(cells_.size(), -1);
    last_visit_[offset_] = 0;
  }
}

void Simulator::EnsureCell(std::int64_t pos) {
  std::int64_t idx = pos + offset_;
  if (idx >= 0 && idx < static_cast<std::int64_t>(cells_.size())) return;
  // Grow on both sides so that back-and-forth sweeps stay amortised.
  std::int64_t old_size = static_cast<std::int64_t>(cells_.size());
  std::int64_t new_size = old_size * 2;
  while (pos + offset_ + (new_size - old_size) / 2 < 0 ||
         pos + offset_ + (new_size - old_size) / 2 >= new_size) {
    new_size *= 2;
  }
  std::int64_t shift = (new_size - old_size) / 2;
  std::vector<Symbol> cells(new_size, 0);
  std::copy(cells_.begin(), cells_.end(), cells.begin() + shift);
  cells_.swap(cells);
  if (track_last_visit_) {
    std::vector<std::int64_t> visits(new_size, -1);
    std::copy(last_visit_.begin(), last_visit_.end(), visits.begin() + shift);
    last_visit_.swap(visits);
  }
  offset_ += shift;
}

bool Simulator::Step() {
  if (halted_) return false;
  Symbol& cell = cells_[head_ + offset_];
  const auto& t = table_.Get(state_, cell);
  if (!t) {
    halted_ = true;
    ++steps_;
    return false;
  }
  cell = t->write;
  head_ += t->move == Move::kLeft ? -1 : 1;
  state_ = t->next;
  ++steps_;
  EnsureCell(head_);
  if (head_ < leftmost_) leftmost_ = head_;
  if (head_ > rightmost_) rightmost_ = head_;
  if (track_last_visit_) last_visit_[head_ + offset_] = static_cast<std::int64_t>(steps_);
  return true;
}

Symbol Simulator::Read(std::int64_t pos) const {
  std::int64_t idx = pos + offset_;
  if (idx < 0 || idx >= static_cast<std::int64_t>(cells_.size())) return 0;
  return cells_[idx];
}

std::int64_t Simulator::LastVisit(std::int64_t pos) const {
  if (!track_last_visit_) throw std::logic_error("last-visit tracking is disabled");
  std::int64_t idx = pos + offset_;
  if (idx < 0 || idx >= static_cast<std::int64_t>(last_visit_.size())) return -1;
  return last_visit_[idx];
}

Configuration Simulator::ToConfiguration() const {
  Configuration c;
  c.state = state_;
  c.head = head_;
  c.leftmost = leftmost_;
  c.rightmost = rightmost_;
  for (std::int64_t pos = leftmost_; pos <= rightmost_; ++pos) {
    if (Symbol s = Read(pos)) c.tape[pos] = s;
  }
  return c;
}

SimulationOutcome Simulate(const TransitionTable& table, std::uint64_t step_limit) {
  Simulator sim(table);
  while (sim.steps() < step_limit) {
    State s = sim.state();
    Symbol read = sim.Read(sim.head());
    if (!sim.Step()) return Halted{sim.steps(), s, read};
  }
  return RunningAtLimit{sim.ToConfiguration()};
}

std::string WordRepresentation(const Configuration& c, std::int64_t lo, std::int64_t hi) {
  if (lo > hi || c.head < lo || c.head > hi) {
    throw std::invalid_argument("window does not contain the head");
  }
  for (const auto& [pos, sym] : c.tape) {
    if (sym != 0 && (pos < lo || pos > hi)) {
      throw std::invalid_argument("window does not contain every nonzero cell");
    }
  }
  std::string out;
  for (std::int64_t pos = lo; pos <= hi; ++pos) {
    if (pos == c.head) out.push_back(StateLetter(c.state));
    out.push_back(static_cast<char>('0' + c.Read(pos)));
  }
  return out;
}

}  // namespace bbdec
