#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bbdec/machine.hpp"
#include "bbdec/simulator.hpp"

namespace bbdec {

// Directional heads sit between two cells and face one of them.
// kLeft is written "<S" and reads the symbol on its left; kRight is "S>".
enum class Facing : std::uint8_t { kLeft, kRight };

struct Head {
  State state = 0;
  Facing facing = Facing::kRight;

  bool operator==(const Head&) const = default;
  auto operator<=>(const Head&) const = default;
};

std::string FormatHead(const Head& h);

// Words are strings over '0' and '1', written left to right.
// An infinite end means the word is bordered by 0^inf on that side.
struct DirectionalTape {
  bool left_inf = true;
  std::string left;
  Head head;
  std::string right;
  bool right_inf = true;

  std::size_t length() const { return left.size() + right.size(); }
  std::string ToString() const;

  bool operator==(const DirectionalTape&) const = default;
};

DirectionalTape InitialDirectionalTape();

enum class StepStatus { kStepped, kHalted, kNoRule };

// Applies one directional rule in place. kNoRule means the head faces a finite end.
StepStatus ApplyDirectionalStep(const TransitionTable& table, DirectionalTape& tape);

// Value form: nullopt when no step is possible.
std::optional<DirectionalTape> DirectionalStep(const TransitionTable& table,
                                               const DirectionalTape& tape);

// Directional simulation from 0^inf A> 0^inf with O(1) steps. The boundary is the
// absolute index of the first cell right of the head, so the classical head is
// boundary() when facing right and boundary() - 1 when facing left.
class DirectionalSimulator {
 public:
  explicit DirectionalSimulator(const TransitionTable& table);

  StepStatus Step();

  const Head& head() const { return head_; }
  std::uint64_t steps() const { return steps_; }
  std::int64_t boundary() const { return boundary_; }
  std::size_t length() const { return left_.size() + right_rev_.size(); }
  bool at_left_end() const { return left_.empty(); }
  bool at_right_end() const { return right_rev_.empty(); }

  DirectionalTape Tape() const;
  // Both words concatenated, head removed.
  std::string HeadlessWord() const;
  Configuration ToClassical() const;

 private:
  const TransitionTable& table_;
  std::string left_;
  std::string right_rev_;
  Head head_;
  std::int64_t boundary_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace bbdec
