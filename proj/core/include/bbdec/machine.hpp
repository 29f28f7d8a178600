#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bbdec {

// States are numbered from 0 (A). Symbols are 0 or 1.
using State = int;
using Symbol = std::uint8_t;

inline constexpr int kMaxStates = 26;

enum class Move : std::uint8_t { kRight = 0, kLeft = 1 };

inline Move Opposite(Move m) { return m == Move::kLeft ? Move::kRight : Move::kLeft; }

struct Transition {
  Symbol write = 0;
  Move move = Move::kRight;
  State next = 0;

  bool operator==(const Transition&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

char StateLetter(State s);

// A (possibly partial) transition table. Undefined entries halt the machine.
class TransitionTable {
 public:
  explicit TransitionTable(int num_states);

  // Standard text format, e.g. "1RB1LC_1RC1RB_1RD0LE_1LA1LD_---0LA".
  static TransitionTable Parse(std::string_view text);
  std::string ToString() const;

  int num_states() const { return num_states_; }

  const std::optional<Transition>& Get(State s, Symbol read) const {
    return entries_[2 * s + read];
  }
  void Set(State s, Symbol read, std::optional<Transition> t);

  bool IsHalting(State s, Symbol read) const { return !Get(s, read).has_value(); }
  int CountUndefined() const;

  // Same machine with every move direction flipped.
  TransitionTable Mirrored() const;

  bool operator==(const TransitionTable&) const = default;

 private:
  int num_states_;
  std::vector<std::optional<Transition>> entries_;
};

}  // namespace bbdec
