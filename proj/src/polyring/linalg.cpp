#include "germforge/linalg.hpp"

#include <utility>

namespace germforge::linalg {

std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < ncols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (m[r][k] != 0) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t rank(Matrix m, std::size_t ncols) { return rref(m, ncols).size(); }

std::vector<Row> nullspace(Matrix m, std::size_t ncols) {
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Row v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Row RowSpace::reduce(Row v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& f = v[pivots_[r]];
    if (f == 0) continue;
    Rational factor = f;
    for (std::size_t k = 0; k < ncols_; ++k)
      if (rows_[r][k] != 0) v[k] -= factor * rows_[r][k];
  }
  return v;
}

bool RowSpace::insert(Row v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ncols_ && v[p] == 0) ++p;
  if (p == ncols_) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // Keep stored rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    Rational f = row[p];
    for (std::size_t k = 0; k < ncols_; ++k)
      if (v[k] != 0) row[k] -= f * v[k];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(const Row& v) const {
  Row r = reduce(v);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace germforge::linalg
