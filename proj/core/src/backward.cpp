#include "bbdec/backward.hpp"

#include <algorithm>
#include <vector>

namespace bbdec {

std::optional<PartialConfiguration> ApplyTransitionBackwards(const PartialConfiguration& conf,
                                                             const SourcedTransition& t) {
  std::int64_t previous = conf.head + (t.entry.move == Move::kRight ? -1 : 1);
  auto it = conf.tape.find(previous);
  if (it != conf.tape.end() && it->second != t.entry.write) return std::nullopt;
  PartialConfiguration prev{t.from, previous, conf.tape, conf.depth + 1};
  prev.tape[previous] = t.read;
  return prev;
}

BackwardResult DecideBackward(const TransitionTable& table, int max_depth,
                              std::uint64_t node_budget) {
  BackwardResult result;
  std::vector<std::vector<SourcedTransition>> reaching(table.num_states());
  for (State s = 0; s < table.num_states(); ++s) {
    for (Symbol r = 0; r < 2; ++r) {
      if (const auto& t = table.Get(s, r)) reaching[t->next].push_back({s, r, *t});
    }
  }

  std::vector<PartialConfiguration> stack;
  for (State s = 0; s < table.num_states(); ++s) {
    for (Symbol r = 0; r < 2; ++r) {
      if (table.IsHalting(s, r)) stack.push_back({s, 0, {{0, r}}, 1});
    }
  }
  // Nothing to reason backwards from.
  if (stack.empty()) return result;

  while (!stack.empty()) {
    PartialConfiguration current = std::move(stack.back());
    stack.pop_back();
    ++result.nodes;
    result.max_depth_reached = std::max(result.max_depth_reached, current.depth);
    if (current.depth > max_depth || result.nodes > node_budget) {
      result.verdict = Verdict::kUnknown;
      return result;
    }
    for (const auto& t : reaching[current.state]) {
      if (auto prev = ApplyTransitionBackwards(current, t)) stack.push_back(std::move(*prev));
    }
  }
  result.verdict = Verdict::kNonHalt;
  return result;
}

}  // namespace bbdec
