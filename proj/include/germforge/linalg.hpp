#pragma once

#include <cstddef>
#include <vector>

#include "germforge/polynomial.hpp"

namespace germforge::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order. Zero rows are removed.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols);

std::size_t rank(Matrix m, std::size_t ncols);

/// Basis of {v : m v = 0}.
std::vector<Row> nullspace(Matrix m, std::size_t ncols);

/// Incrementally maintained row space: tracks whether new vectors are
/// independent of those already inserted.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ncols) : ncols_(ncols) {}
  /// Reduces `v` against the space; returns true and stores it when the
  /// residue is nonzero.
  bool insert(Row v);
  /// Residue of `v` after reduction against the stored rows.
  Row reduce(Row v) const;
  bool contains(const Row& v) const;
  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t ncols() const noexcept { return ncols_; }

 private:
  std::size_t ncols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace germforge::linalg
