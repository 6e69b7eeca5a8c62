#include "mbqc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace mbqc {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (size_ != o.size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& o) {
  if (size_ != o.size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& o) const {
  if (size_ != o.size_) throw std::invalid_argument("BitVector size mismatch");
  uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

bool BitVector::any() const {
  for (uint64_t w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) r.push_back(i);
  return r;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool BitVector::operator<(const BitVector& o) const {
  std::size_t n = std::min(size_, o.size_);
  for (std::size_t i = 0; i < n; ++i) {
    bool a = get(i), b = o.get(i);
    if (a != b) return b;  // '0' < '1'
  }
  return size_ < o.size_;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitVector BitMatrix::col(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (get(r, c)) v.set(r, true);
  return v;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows()) throw std::invalid_argument("BitMatrix shape mismatch in *");
  BitMatrix r(rows(), o.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k)) r.rows_[i] ^= o.rows_[k];
  return r;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("BitMatrix shape mismatch in *");
  BitVector r(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    if (rows_[i].dot(v)) r.set(i, true);
  return r;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("BitMatrix shape mismatch in +");
  BitMatrix r = *this;
  for (std::size_t i = 0; i < rows(); ++i) r.rows_[i] ^= o.rows_[i];
  return r;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix r(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) r.set(j, i, true);
  return r;
}

BitMatrix BitMatrix::submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
  BitMatrix r(ri.size(), ci.size());
  for (std::size_t i = 0; i < ri.size(); ++i)
    for (std::size_t j = 0; j < ci.size(); ++j)
      if (get(ri[i], ci[j])) r.set(i, j, true);
  return r;
}

BitMatrix BitMatrix::hstack(const BitMatrix& o) const {
  if (rows() != o.rows()) throw std::invalid_argument("hstack row mismatch");
  BitMatrix r(rows(), cols_ + o.cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) r.set(i, j, true);
    for (std::size_t j = 0; j < o.cols_; ++j)
      if (o.get(i, j)) r.set(i, cols_ + j, true);
  }
  return r;
}

BitMatrix BitMatrix::vstack(const BitMatrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack column mismatch");
  BitMatrix r(rows() + o.rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i) r.rows_[i] = rows_[i];
  for (std::size_t i = 0; i < o.rows(); ++i) r.rows_[rows() + i] = o.rows_[i];
  return r;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (r.any()) return false;
  return true;
}

bool BitMatrix::operator<(const BitMatrix& o) const {
  if (rows() != o.rows()) return rows() < o.rows();
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i] == o.rows_[i]) continue;
    return rows_[i] < o.rows_[i];
  }
  return false;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) s += '\n';
    s += rows_[i].to_string();
  }
  return s;
}

RowReduction rref(const BitMatrix& m) {
  RowReduction r{m, BitMatrix::identity(m.rows()), {}};
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    // greedy leftmost pivot, smallest row index
    std::size_t sel = pr;
    while (sel < m.rows() && !r.rref.get(sel, c)) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr) {
      r.rref.swap_rows(sel, pr);
      r.ops.swap_rows(sel, pr);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != pr && r.rref.get(i, c)) {
        r.rref.xor_row_into(i, pr);
        r.ops.xor_row_into(i, pr);
      }
    }
    r.pivots.push_back(c);
    ++pr;
  }
  return r;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

std::optional<BitMatrix> invert(const BitMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RowReduction r = rref(m);
  if (r.pivots.size() != m.rows()) return std::nullopt;
  return r.ops;  // ops * m == I when full rank
}

std::optional<BitMatrix> solve(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  RowReduction r = rref(a);
  BitMatrix rb = r.ops * b;
  // consistency: zero rows of rref must have zero rhs
  for (std::size_t i = r.pivots.size(); i < a.rows(); ++i)
    if (rb.row(i).any()) return std::nullopt;
  BitMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x.set_row(r.pivots[i], rb.row(i));
  return x;
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
  BitMatrix bm(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.get(i)) bm.set(i, 0, true);
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  return x->col(0);
}

}  // namespace mbqc
