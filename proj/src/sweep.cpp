#include "hopfoid/sweep.hpp"

#include "hopfoid/parallel.hpp"

namespace hopfoid {

std::optional<Witness> sweep(std::size_t n, const par::SweepPlan& plan, const std::function<bool(Index)>& fails,
                             const std::function<std::string(Index)>& describe) {
  auto bad = par::first_failure(n, plan, [&](std::size_t k) { return fails(static_cast<Index>(k)); });
  if (!bad) return std::nullopt;
  const Index i = static_cast<Index>(*bad);
  return Witness{{i}, {}, describe(i)};
}

std::optional<Witness> sweep_pairs(std::size_t n1, std::size_t n2, const par::SweepPlan& plan,
                                   const std::function<bool(Index, Index)>& fails,
                                   const std::function<std::string(Index, Index)>& describe) {
  auto bad = par::first_failure(n1 * n2, plan, [&](std::size_t k) {
    return fails(static_cast<Index>(k / n2), static_cast<Index>(k % n2));
  });
  if (!bad) return std::nullopt;
  const Index i = static_cast<Index>(*bad / n2), j = static_cast<Index>(*bad % n2);
  return Witness{{i, j}, {}, describe(i, j)};
}

Vec as_matrix_units(const LinearMap& m) {
  VecBuilder b;
  const std::size_t n = m.cols();
  for (Index j = 0; j < n; ++j)
    for (const auto& [i, c] : m.column(j).terms()) b.add(static_cast<Index>(i * n + j), c);
  return b.build();
}

Vec apply_matrix_units(const Vec& m, const Vec& v, std::size_t n) {
  VecBuilder b;
  for (const auto& [k, c] : m.terms()) {
    auto [i, j] = split_index(k, n);
    const Scalar x = v[j];
    if (!x.is_zero()) b.add(i, c * x);
  }
  return b.build();
}

}  // namespace hopfoid
