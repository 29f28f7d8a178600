#pragma once

#include <cstdint>
#include <vector>

#include "bbdec/decision.hpp"
#include "bbdec/machine.hpp"

namespace bbdec {

struct CyclerResult {
  Verdict verdict = Verdict::kUnknown;
  // NonHalt: configuration at step first_seen reappears at step repeated_at.
  std::uint64_t first_seen = 0;
  std::uint64_t repeated_at = 0;
  // Halt: step of the undefined transition.
  std::uint64_t halt_step = 0;
};

// Exceeding max_configurations stored configurations gives Unknown.
CyclerResult DecideCyclers(const TransitionTable& table, std::uint64_t time_limit = 1000,
                           std::size_t max_configurations = std::size_t{1} << 20);

enum class Side { kLeft, kRight };

// Tape snapshot taken when the head breaks a record on one side.
struct RecordBreakingConfiguration {
  std::uint64_t step = 0;
  Side side = Side::kRight;
  State state = 0;
  std::int64_t head = 0;
  std::int64_t lo = 0;  // position of values[0]
  std::vector<std::uint8_t> values;
  std::vector<std::int64_t> last_visit;  // -1 when never visited

  std::uint8_t ValueAt(std::int64_t pos) const;
  std::int64_t LastVisitAt(std::int64_t pos) const;
};

// Largest distance, measured from the older record's head, of any cell the head
// visited between the two records without going beyond the older record position.
std::int64_t ComputeDistanceL(const RecordBreakingConfiguration& current,
                              const RecordBreakingConfiguration& older);

// True when the two records prove a translated cycle.
bool CheckRecordPair(const RecordBreakingConfiguration& current,
                     const RecordBreakingConfiguration& older);

struct TranslatedCyclerResult {
  Verdict verdict = Verdict::kUnknown;
  std::uint64_t older_step = 0;
  std::uint64_t current_step = 0;
  Side side = Side::kRight;
  std::int64_t distance = 0;
  std::uint64_t halt_step = 0;
};

TranslatedCyclerResult DecideTranslatedCyclers(const TransitionTable& table,
                                               std::uint64_t time_limit = 10000);

}  // namespace bbdec
