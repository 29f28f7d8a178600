#include "bbdec/seed_db.hpp"

#include <filesystem>

namespace bbdec {

TransitionTable DecodeDbRecord(std::span<const std::uint8_t> bytes, bool left_is_zero) {
  if (bytes.size() != kDbRecordSize) throw DbError("record must be 30 bytes");
  TransitionTable table(kDbStates);
  for (int i = 0; i < 2 * kDbStates; ++i) {
    std::uint8_t write = bytes[3 * i];
    std::uint8_t move = bytes[3 * i + 1];
    std::uint8_t next = bytes[3 * i + 2];
    if (write > 1 || move > 1 || next > kDbStates) {
      throw DbError("byte out of range in record entry " + std::to_string(i));
    }
    if (next == 0) continue;
    bool left = left_is_zero ? move == 0 : move == 1;
    table.Set(i / 2, static_cast<Symbol>(i % 2),
              Transition{write, left ? Move::kLeft : Move::kRight, next - 1});
  }
  return table;
}

std::array<std::uint8_t, kDbRecordSize> EncodeDbRecord(const TransitionTable& table,
                                                       bool left_is_zero) {
  if (table.num_states() > kDbStates) throw DbError("records hold at most 5 states");
  std::array<std::uint8_t, kDbRecordSize> out{};
  for (State s = 0; s < table.num_states(); ++s) {
    for (Symbol r = 0; r < 2; ++r) {
      const auto& t = table.Get(s, r);
      if (!t) continue;
      int i = 2 * s + r;
      bool left = t->move == Move::kLeft;
      out[3 * i] = t->write;
      out[3 * i + 1] = static_cast<std::uint8_t>(left != left_is_zero ? 1 : 0);
      out[3 * i + 2] = static_cast<std::uint8_t>(t->next + 1);
    }
  }
  return out;
}

SeedDatabase::SeedDatabase(const std::string& path, bool left_is_zero)
    : in_(path, std::ios::binary), left_is_zero_(left_is_zero) {
  if (!in_) throw DbError("cannot open " + path);
  std::uintmax_t bytes = std::filesystem::file_size(path);
  if (bytes < kDbHeaderSize || (bytes - kDbHeaderSize) % kDbRecordSize != 0) {
    throw DbError("file size is not 30 + 30 * count");
  }
  count_ = (bytes - kDbHeaderSize) / kDbRecordSize;
  in_.read(reinterpret_cast<char*>(header_.data()), kDbHeaderSize);
}

TransitionTable SeedDatabase::Read(std::uint64_t index) {
  if (index >= count_) throw DbError("record index out of range");
  std::array<std::uint8_t, kDbRecordSize> record{};
  in_.seekg(static_cast<std::streamoff>(kDbHeaderSize + index * kDbRecordSize));
  in_.read(reinterpret_cast<char*>(record.data()), kDbRecordSize);
  if (!in_) throw DbError("short read at record " + std::to_string(index));
  return DecodeDbRecord(record, left_is_zero_);
}

}  // namespace bbdec
