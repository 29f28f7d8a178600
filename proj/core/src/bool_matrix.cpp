#include "bbdec/bool_matrix.hpp"

#include <stdexcept>

namespace bbdec {

BoolMatrix::BoolMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * words_, 0);
}

BoolMatrix BoolMatrix::Identity(int n) {
  BoolMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.Set(i, i);
  return m;
}

BoolMatrix BoolMatrix::Basis(int n, int i) {
  BoolMatrix m(1, n);
  m.Set(0, i);
  return m;
}

void BoolMatrix::Set(int r, int c, bool value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  std::uint64_t& word = data_[static_cast<std::size_t>(r) * words_ + c / 64];
  std::uint64_t bit = std::uint64_t{1} << (c % 64);
  word = value ? (word | bit) : (word & ~bit);
}

bool BoolMatrix::OrIntoRow(int r, const std::uint64_t* bits) {
  std::uint64_t* row = MutableRow(r);
  bool changed = false;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t merged = row[w] | bits[w];
    changed |= merged != row[w];
    row[w] = merged;
  }
  return changed;
}

bool BoolMatrix::RowIsZero(int r) const {
  const std::uint64_t* row = Row(r);
  for (int w = 0; w < words_; ++w) {
    if (row[w]) return false;
  }
  return true;
}

void BoolMatrix::VectorTimes(const std::uint64_t* v, std::uint64_t* out) const {
  for (int w = 0; w < words_; ++w) out[w] = 0;
  for (int wv = 0; wv * 64 < rows_; ++wv) {
    std::uint64_t bits = v[wv];
    while (bits) {
      int k = wv * 64 + __builtin_ctzll(bits);
      bits &= bits - 1;
      const std::uint64_t* row = Row(k);
      for (int w = 0; w < words_; ++w) out[w] |= row[w];
    }
  }
}

bool BoolMatrix::IsZero() const {
  for (auto w : data_) {
    if (w) return false;
  }
  return true;
}

BoolMatrix BoolMatrix::Transposed() const {
  BoolMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (Get(r, c)) t.Set(c, r);
    }
  }
  return t;
}

void BoolMatrix::CheckSameShape(const BoolMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
}

bool BoolMatrix::LessEq(const BoolMatrix& other) const {
  CheckSameShape(other);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] & ~other.data_[i]) return false;
  }
  return true;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  BoolMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) other.VectorTimes(Row(r), out.MutableRow(r));
  return out;
}

BoolMatrix BoolMatrix::operator+(const BoolMatrix& other) const {
  CheckSameShape(other);
  BoolMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] |= other.data_[i];
  return out;
}

std::string BoolMatrix::ToString() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) out.push_back(';');
    for (int c = 0; c < cols_; ++c) out.push_back(Get(r, c) ? '1' : '0');
  }
  return out;
}

}  // namespace bbdec
