#include "hopfoid/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <set>

namespace hopfoid::par {

namespace {
int g_threads = 0;
}

void set_num_threads(int n) { g_threads = n > 0 ? n : 0; }

int num_threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

std::optional<std::size_t> first_failure_serial(std::size_t n, const std::function<bool(std::size_t)>& fails) {
  for (std::size_t i = 0; i < n; ++i)
    if (fails(i)) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& fails) {
  const int threads = num_threads();
  if (threads <= 1 || n < 2) return first_failure_serial(n, fails);

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::exception_ptr error;
  std::size_t error_index = kNone;
  std::mutex error_mu;

  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long long k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i > best.load(std::memory_order_relaxed)) continue;
    try {
      if (fails(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error && error_index <= best.load()) std::rethrow_exception(error);
  const std::size_t b = best.load();
  if (b == kNone) return std::nullopt;
  return b;
}

std::vector<std::size_t> plan_indices(std::size_t n, const SweepPlan& plan) {
  std::vector<std::size_t> out;
  if (plan.exhaustive_for(n)) {
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
  }
  std::mt19937_64 rng(plan.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::set<std::size_t> chosen;
  while (chosen.size() < plan.max_items) chosen.insert(pick(rng));
  return {chosen.begin(), chosen.end()};
}

std::optional<std::size_t> first_failure(std::size_t n, const SweepPlan& plan,
                                         const std::function<bool(std::size_t)>& fails) {
  if (plan.exhaustive_for(n)) return first_failure(n, fails);
  const auto idx = plan_indices(n, plan);
  auto bad = first_failure(idx.size(), [&](std::size_t k) { return fails(idx[k]); });
  if (!bad) return std::nullopt;
  return idx[*bad];
}

void for_each(std::size_t n, const std::function<void(std::size_t)>& body) {
  const int threads = num_threads();
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  std::mutex error_mu;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long long k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace hopfoid::par
