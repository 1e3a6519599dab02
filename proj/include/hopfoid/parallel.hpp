#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

// Sweep kernels used by every axiom check.  Each kernel has an OpenMP
// implementation and a serial reference; both return identical results
// (the smallest failing index, or the same per-index values) regardless of
// thread count or scheduling.

namespace hopfoid::par {

/// Thread count for the OpenMP kernels; n <= 0 restores the default.
void set_num_threads(int n);
int num_threads();

/// Smallest i in [0, n) with fails(i), or nullopt.
std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& fails);
std::optional<std::size_t> first_failure_serial(std::size_t n, const std::function<bool(std::size_t)>& fails);

/// Exhaustive sweep unless `max_items` is set and smaller than the sweep;
/// then a fixed-seed uniform sample of that many distinct indices.
struct SweepPlan {
  std::size_t max_items = 0;
  std::uint64_t seed = 0x5eed;
  bool exhaustive_for(std::size_t n) const { return max_items == 0 || n <= max_items; }
};

/// Indices visited by `plan` over [0, n), ascending.
std::vector<std::size_t> plan_indices(std::size_t n, const SweepPlan& plan);
std::optional<std::size_t> first_failure(std::size_t n, const SweepPlan& plan,
                                         const std::function<bool(std::size_t)>& fails);

/// out[i] = fn(i) for i in [0, n).
template <class T>
std::vector<T> map(std::size_t n, const std::function<T(std::size_t)>& fn);
template <class T>
std::vector<T> map_serial(std::size_t n, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

/// Runs body(i) for i in [0, n); the first exception (lowest i) is rethrown.
void for_each(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hopfoid::par

#include "hopfoid/parallel_impl.hpp"
