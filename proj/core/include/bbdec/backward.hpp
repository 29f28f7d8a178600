#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "bbdec/decision.hpp"
#include "bbdec/machine.hpp"

namespace bbdec {

// A configuration known only on the cells it constrains. depth counts the steps
// from this configuration to the halt, the undefined transition included, so a
// halting configuration has depth 1.
struct PartialConfiguration {
  State state = 0;
  std::int64_t head = 0;
  std::map<std::int64_t, Symbol> tape;
  int depth = 1;

  bool operator==(const PartialConfiguration&) const = default;
};

// A defined transition seen from its source: (from, read) -> entry.
struct SourcedTransition {
  State from = 0;
  Symbol read = 0;
  Transition entry;
};

// Predecessor of conf through t, or nullopt on a contradiction.
std::optional<PartialConfiguration> ApplyTransitionBackwards(const PartialConfiguration& conf,
                                                             const SourcedTransition& t);

struct BackwardResult {
  Verdict verdict = Verdict::kUnknown;
  int max_depth_reached = 0;
  std::uint64_t nodes = 0;
};

// Depth-first backward search from every undefined transition. NonHalt means no
// halting configuration is reachable in more than max_depth steps; callers must
// still check that the machine runs max_depth steps without halting.
BackwardResult DecideBackward(const TransitionTable& table, int max_depth,
                              std::uint64_t node_budget = std::uint64_t{1} << 22);

}  // namespace bbdec
