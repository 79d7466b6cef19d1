#include "gwa/linalg.hpp"

namespace gwa {

std::optional<std::vector<Scalar>> solve_linear(ScalarMatrix m, std::vector<Scalar> rhs) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  std::vector<size_t> pivot_col(rows, SIZE_MAX);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = SIZE_MAX;
    for (size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr == SIZE_MAX) continue;
    std::swap(m[r], m[pr]);
    std::swap(rhs[r], rhs[pr]);
    Scalar inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<Scalar> x(cols, Scalar());
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

unsigned matrix_rank(ScalarMatrix m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  unsigned rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = SIZE_MAX;
    for (size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr == SIZE_MAX) continue;
    std::swap(m[r], m[pr]);
    Scalar inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++rank;
    ++r;
  }
  return rank;
}

}  // namespace gwa
