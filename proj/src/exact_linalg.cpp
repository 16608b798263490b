#include "djkm/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace djkm {

std::vector<int> row_reduce(RationalMatrix& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][static_cast<std::size_t>(col)].is_zero()) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = m[row][static_cast<std::size_t>(col)].reciprocal();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row) continue;
      const Rational factor = m[r][static_cast<std::size_t>(col)];
      if (factor.is_zero()) continue;
      for (std::size_t k = 0; k < static_cast<std::size_t>(cols); ++k) m[r][k] -= factor * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(RationalMatrix m, int cols) { return static_cast<int>(row_reduce(m, cols).size()); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m, int cols) {
  const std::vector<int> pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(free)] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  }
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && m[pick][col].is_zero()) ++pick;
    if (pick == n) return Rational(0);
    if (pick != col) {
      std::swap(m[pick], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].reciprocal();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational factor = m[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  return det;
}

}  // namespace djkm
