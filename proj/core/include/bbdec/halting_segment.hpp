#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bbdec/decision.hpp"
#include "bbdec/machine.hpp"

namespace bbdec {

inline constexpr State kBottom = -1;
inline constexpr int kMaxSegmentSize = 62;

// Machine state on a window of n cells. pos is -1 or n when the head is outside.
// Bottom nodes remember the undefined transition (halt_state, halt_read).
struct SegmentConfiguration {
  State state = 0;
  std::uint64_t segment = 0;  // bit i holds cell i
  int pos = 0;
  State halt_state = 0;
  Symbol halt_read = 0;

  Symbol Cell(int i) const { return static_cast<Symbol>((segment >> i) & 1U); }

  // "A - [0] 0 -" or "_|_ C1 [-] 0 0 -".
  std::string ToString(int n) const;

  bool operator==(const SegmentConfiguration&) const = default;
};

// Children of a non-bottom node, in transition order.
std::vector<SegmentConfiguration> ExpandNode(const TransitionTable& table, int n,
                                             const SegmentConfiguration& node);

struct HaltingPosition {
  State state = 0;
  Symbol read = 0;
  int pos = 0;

  bool operator==(const HaltingPosition&) const = default;
};

struct HaltingSegmentResult {
  Verdict verdict = Verdict::kUnknown;
  int n = 0;
  std::uint64_t nodes = 0;
  // NonHalt: halting nodes missing from the graph, one list per undefined transition.
  std::vector<HaltingPosition> uncovered;
};

HaltingSegmentResult DecideHaltingSegment(const TransitionTable& table, int n,
                                          std::uint64_t node_budget = std::uint64_t{1} << 22);

}  // namespace bbdec
