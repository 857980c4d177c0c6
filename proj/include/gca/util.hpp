#pragma once

#include <cstdint>
#include <vector>

#include "gca/errors.hpp"

namespace gca {

// [x]_+ = max(x, 0), the truncation that shows up all over mutation rules.
inline std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }

// Dense row-major integer matrix, just big enough for exchange matrices and
// C/G-matrices.  Entries are int64; mutation can only grow them slowly.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const IntMat&) const = default;

  IntMat transpose() const {
    IntMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  int rows_{0};
  int cols_{0};
  std::vector<std::int64_t> a_;
};

inline IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  IntMat p(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (int c = 0; c < b.cols(); ++c) p(r, c) += a(r, k) * b(k, c);
    }
  return p;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline std::int64_t int_det(IntMat m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const int n = m.rows();
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? 1 : sign * m(n - 1, n - 1);
}

inline IntMat diag_scale_rows(const std::vector<std::int64_t>& d, const IntMat& m) {
  IntMat r = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = d[static_cast<std::size_t>(i)] * m(i, j);
  return r;
}

inline IntMat diag_scale_cols(const IntMat& m, const std::vector<std::int64_t>& d) {
  IntMat r = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j) * d[static_cast<std::size_t>(j)];
  return r;
}

}  // namespace gca
