#pragma once

#include <utility>
#include <vector>

#include "projlat/field.hpp"

namespace projlat {

/// Rank of a dense matrix (rows of equal length) by Gaussian elimination.
template <Field K>
std::size_t matrix_rank(const K& field, std::vector<std::vector<typename K::value_type>> rows) {
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && field.is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = field.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (field.is_zero(rows[r][col])) continue;
      const auto factor = field.mul(rows[r][col], inv);
      for (std::size_t c = col; c < width; ++c) {
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace projlat
