#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>

#include "bbdec/machine.hpp"

namespace bbdec {

inline constexpr std::size_t kDbHeaderSize = 30;
inline constexpr std::size_t kDbRecordSize = 30;
inline constexpr int kDbStates = 5;

class DbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per (state, read): write byte, move byte, next byte (0 = undefined, 1..5 = A..E).
// The move byte is 0 for R unless left_is_zero flips the polarity.
TransitionTable DecodeDbRecord(std::span<const std::uint8_t> bytes, bool left_is_zero = false);
std::array<std::uint8_t, kDbRecordSize> EncodeDbRecord(const TransitionTable& table,
                                                       bool left_is_zero = false);

class SeedDatabase {
 public:
  explicit SeedDatabase(const std::string& path, bool left_is_zero = false);

  std::uint64_t size() const { return count_; }
  const std::array<std::uint8_t, kDbHeaderSize>& header() const { return header_; }

  TransitionTable Read(std::uint64_t index);

 private:
  std::ifstream in_;
  bool left_is_zero_;
  std::uint64_t count_ = 0;
  std::array<std::uint8_t, kDbHeaderSize> header_{};
};

}  // namespace bbdec
