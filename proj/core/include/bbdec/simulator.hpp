#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bbdec/machine.hpp"

namespace bbdec {

// Classical configuration: the head sits on a cell. Only nonzero cells are stored.
struct Configuration {
  State state = 0;
  std::int64_t head = 0;
  std::map<std::int64_t, Symbol> tape;
  // Extent of the cells the head has visited.
  std::int64_t leftmost = 0;
  std::int64_t rightmost = 0;

  Symbol Read(std::int64_t pos) const;
  void Write(std::int64_t pos, Symbol s);

  bool operator==(const Configuration&) const = default;
};

// One classical step. Returns nullopt when the transition is undefined.
std::optional<Configuration> MachineStep(const TransitionTable& table, const Configuration& c);

// Dense-tape simulator used by every forward decider.
class Simulator {
 public:
  explicit Simulator(const TransitionTable& table, bool track_last_visit = false);

  // Performs one step. Returns false (and sets halted()) when the transition is undefined.
  bool Step();

  State state() const { return state_; }
  std::int64_t head() const { return head_; }
  std::uint64_t steps() const { return steps_; }
  bool halted() const { return halted_; }
  std::int64_t leftmost() const { return leftmost_; }
  std::int64_t rightmost() const { return rightmost_; }

  Symbol Read(std::int64_t pos) const;
  // Step at which the head last stood on pos, or -1.
  std::int64_t LastVisit(std::int64_t pos) const;

  Configuration ToConfiguration() const;

 private:
  void EnsureCell(std::int64_t pos);

  const TransitionTable& table_;
  bool track_last_visit_;
  std::vector<Symbol> cells_;
  std::vector<std::int64_t> last_visit_;
  std::int64_t offset_;
  State state_ = 0;
  std::int64_t head_ = 0;
  std::uint64_t steps_ = 0;
  bool halted_ = false;
  std::int64_t leftmost_ = 0;
  std::int64_t rightmost_ = 0;
};

struct Halted {
  // Counts the undefined transition itself, so a machine that halts immediately halts at step 1.
  std::uint64_t step = 0;
  State state = 0;
  Symbol read = 0;
};

struct RunningAtLimit {
  Configuration config;
};

using SimulationOutcome = std::variant<Halted, RunningAtLimit>;

SimulationOutcome Simulate(const TransitionTable& table, std::uint64_t step_limit);

// E.g. "00A001100": the state letter is printed just before the head cell.
std::string WordRepresentation(const Configuration& c, std::int64_t lo, std::int64_t hi);

}  // namespace bbdec
