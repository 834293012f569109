#pragma once

#include <cstddef>

#include "pbasis/vec.hpp"

namespace pbasis {

/// Matrix rank by rational Gaussian elimination. Exact: pivots are any
/// nonzero entry, no magnitude heuristics needed.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c) / m.at(r, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const VecSet& set) { return rank(rows_matrix(set)); }

}  // namespace pbasis
