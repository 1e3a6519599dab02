#pragma once

// Dense reference computations used to cross-check the sparse library code.

#include <memory>
#include <vector>

#include "hopfoid/examples.hpp"
#include "hopfoid/sweep.hpp"

namespace oracle {

using hopfoid::Index;
using hopfoid::Scalar;

using Dense = std::vector<std::vector<Scalar>>;

inline Dense dense(const hopfoid::LinearMap& m) {
  Dense out(m.rows(), std::vector<Scalar>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j)
    for (const auto& [i, c] : m.column(j).terms()) out[i][j] = c;
  return out;
}

/// Plain Gaussian elimination, row by row.
inline std::size_t rank(Dense a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Scalar inv = a[r][c].inverse();
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const hopfoid::LinearMap& m) { return rank(dense(m)); }

/// The slq2 tower at d = 3, built once per test binary.
inline const hopfoid::Slq2Tower& slq2_d3() {
  static const auto tower = std::make_unique<hopfoid::Slq2Tower>(hopfoid::build_slq2(3));
  return *tower;
}

}  // namespace oracle
