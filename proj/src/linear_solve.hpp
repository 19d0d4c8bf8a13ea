#pragma once

#include "quadareas/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quadareas::detail {

using Matrix = std::vector<Tuple>;

/// Exact Gauss-Jordan elimination for a square system A x = b.
/// Returns nullopt when A is singular.
inline std::optional<Tuple> solve_square(Matrix a, Tuple b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  Tuple x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Coordinates of x in the basis `columns`, read off the rows listed in
/// `rows` (which must select a nonsingular minor).
inline std::optional<Tuple> coordinates_on_rows(const std::vector<const Tuple*>& columns,
                                                const Tuple& x,
                                                const std::vector<std::size_t>& rows) {
  Matrix a(rows.size(), Tuple(columns.size()));
  Tuple b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) a[r][c] = (*columns[c])[rows[r]];
    b[r] = x[rows[r]];
  }
  return solve_square(std::move(a), std::move(b));
}

}  // namespace quadareas::detail
