#pragma once

// Dense Gaussian elimination over an exact field. Matrices here are the
// degree-a slices of multigraded maps, so they stay small.

#include "field.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace syzdepth {

template <class K>
using DenseRows = std::vector<std::vector<K>>;

template <class K>
struct Echelon {
  DenseRows<K> rows;                 // reduced, pivot entries equal to 1
  std::vector<std::size_t> pivots;   // pivot column of each row
};

template <class K>
Echelon<K> reduced_row_echelon(DenseRows<K> rows, std::size_t ncols) {
  using T = FieldTraits<K>;
  Echelon<K> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && T::is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    K inv = K(1) / rows[r][c];
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || T::is_zero(rows[i][c])) continue;
      K f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

template <class K>
std::size_t rank(DenseRows<K> rows, std::size_t ncols) {
  return reduced_row_echelon(std::move(rows), ncols).pivots.size();
}

// Solves A x = b. A is given by its columns, each of length b.size().
template <class K>
std::optional<std::vector<K>> solve_columns(const DenseRows<K>& columns, const std::vector<K>& b) {
  const std::size_t m = b.size(), k = columns.size();
  DenseRows<K> aug(m, std::vector<K>(k + 1, K(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
    aug[i][k] = b[i];
  }
  auto ech = reduced_row_echelon(std::move(aug), k + 1);
  std::vector<K> x(k, K(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == k) return std::nullopt;
    x[ech.pivots[r]] = ech.rows[r][k];
  }
  return x;
}

}  // namespace syzdepth
