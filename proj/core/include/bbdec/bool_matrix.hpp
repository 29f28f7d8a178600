#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bbdec {

// Matrix over the Boolean semiring (+ is OR, * is AND), stored as bit rows.
// Row vectors are 1 x n matrices.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols);

  static BoolMatrix Identity(int n);
  static BoolMatrix RowVector(int n) { return BoolMatrix(1, n); }
  static BoolMatrix Basis(int n, int i);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_; }

  bool Get(int r, int c) const {
    return (data_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void Set(int r, int c, bool value = true);

  const std::uint64_t* Row(int r) const { return data_.data() + static_cast<std::size_t>(r) * words_; }
  std::uint64_t* MutableRow(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }

  // row_r |= bits; returns true when a bit changed.
  bool OrIntoRow(int r, const std::uint64_t* bits);
  bool RowIsZero(int r) const;

  // OR of the rows of this matrix selected by the bits of v (v has cols() == rows()).
  void VectorTimes(const std::uint64_t* v, std::uint64_t* out) const;

  bool IsZero() const;
  BoolMatrix Transposed() const;

  // Elementwise order: *this <= other.
  bool LessEq(const BoolMatrix& other) const;

  BoolMatrix operator*(const BoolMatrix& other) const;
  BoolMatrix operator+(const BoolMatrix& other) const;
  bool operator==(const BoolMatrix& other) const = default;

  // Rows of '0'/'1' separated by ';'.
  std::string ToString() const;

 private:
  void CheckSameShape(const BoolMatrix& other) const;

  int rows_ = 0;
  int cols_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace bbdec
