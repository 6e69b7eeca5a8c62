#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Dense GF(2) linear algebra on bit-packed rows (64-bit word granularity).
// Indices in this header are 0-based; higher layers speak 1-based qubit
// labels and convert at their boundary.

namespace mbqc {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  BitVector operator^(const BitVector& o) const {
    BitVector r = *this;
    r ^= o;
    return r;
  }
  BitVector& operator|=(const BitVector& o);

  /// Symplectic-friendly parity of the AND with another vector: <a, b> mod 2.
  bool dot(const BitVector& o) const;
  bool any() const;
  std::size_t count() const;

  /// Indices of set bits, ascending.
  std::vector<std::size_t> ones() const;

  std::string to_string() const;  // e.g. "0110"

  bool operator==(const BitVector& o) const { return size_ == o.size_ && words_ == o.words_; }
  bool operator<(const BitVector& o) const;  // lexicographic on bit string

 private:
  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  void set_row(std::size_t r, const BitVector& v) { rows_[r] = v; }
  BitVector col(std::size_t c) const;
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
  void xor_row_into(std::size_t dst, std::size_t src) { rows_[dst] ^= rows_[src]; }

  BitMatrix operator*(const BitMatrix& o) const;
  BitVector operator*(const BitVector& v) const;
  BitMatrix operator+(const BitMatrix& o) const;  // XOR
  BitMatrix transposed() const;

  /// Rows picked by `ri`, columns picked by `ci` (either may repeat or reorder).
  BitMatrix submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const;
  /// Glue columns of `o` to the right (row counts must match).
  BitMatrix hstack(const BitMatrix& o) const;
  /// Glue rows of `o` below (column counts must match).
  BitMatrix vstack(const BitMatrix& o) const;

  bool is_zero() const;
  bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }
  bool operator<(const BitMatrix& o) const;  // row-major lexicographic

  std::string to_string() const;  // '0'/'1' rows joined by '\n'

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Row reduction outcome: `ops` is invertible with ops * input == rref.
struct RowReduction {
  BitMatrix rref;
  BitMatrix ops;
  std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

RowReduction rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<BitMatrix> invert(const BitMatrix& m);

/// Any X with A*X == B, or nullopt if the system is infeasible.
std::optional<BitMatrix> solve(const BitMatrix& a, const BitMatrix& b);
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

}  // namespace mbqc
