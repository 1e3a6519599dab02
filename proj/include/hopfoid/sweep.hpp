#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hopfoid/linalg.hpp"
#include "hopfoid/parallel.hpp"
#include "hopfoid/report.hpp"

namespace hopfoid {

/// First failing i in [0, n) under `plan`, as a witness.
std::optional<Witness> sweep(std::size_t n, const par::SweepPlan& plan, const std::function<bool(Index)>& fails,
                             const std::function<std::string(Index)>& describe);

/// First failing (i, j) in [0, n1) x [0, n2) under `plan`, row-major.
std::optional<Witness> sweep_pairs(std::size_t n1, std::size_t n2, const par::SweepPlan& plan,
                                   const std::function<bool(Index, Index)>& fails,
                                   const std::function<std::string(Index, Index)>& describe);

/// A linear map on k^n flattened onto matrix units: entry (i, j) at i * n + j.
Vec as_matrix_units(const LinearMap& m);
/// Applies a matrix-unit vector to v in k^n.
Vec apply_matrix_units(const Vec& m, const Vec& v, std::size_t n);

}  // namespace hopfoid
