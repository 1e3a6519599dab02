#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "hopfoid/parallel.hpp"

using namespace hopfoid;

TEST_SUITE("parallel") {
  TEST_CASE("first failure matches the serial reference") {
    std::mt19937 rng(29);
    for (int threads : {1, 2, 4}) {
      par::set_num_threads(threads);
      for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = rng() % 500;
        std::vector<bool> bad(n);
        for (std::size_t i = 0; i < n; ++i) bad[i] = rng() % 97 == 0;
        auto fails = [&](std::size_t i) { return static_cast<bool>(bad[i]); };
        CHECK(par::first_failure(n, fails) == par::first_failure_serial(n, fails));
      }
    }
    par::set_num_threads(0);
  }

  TEST_CASE("map matches the serial reference") {
    par::set_num_threads(3);
    auto fn = [](std::size_t i) { return static_cast<long>(i * i % 101); };
    CHECK(par::map<long>(1000, fn) == par::map_serial<long>(1000, fn));
    par::set_num_threads(0);
  }

  TEST_CASE("sampling plans") {
    const par::SweepPlan exhaustive;
    CHECK(par::plan_indices(10, exhaustive).size() == 10);
    const par::SweepPlan sample{25, 42};
    CHECK(sample.exhaustive_for(25));
    CHECK_FALSE(sample.exhaustive_for(26));
    const auto a = par::plan_indices(1000, sample);
    CHECK(a == par::plan_indices(1000, sample));
    CHECK(a.size() == 25);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::set<std::size_t>(a.begin(), a.end()).size() == 25);
    CHECK(a.back() < 1000);
    CHECK(a != par::plan_indices(1000, par::SweepPlan{25, 43}));
    // the sampled sweep reports the first failing sampled index
    const auto w = par::first_failure(1000, sample, [&](std::size_t i) { return i >= a[3]; });
    CHECK(w == a[3]);
  }

  TEST_CASE("for_each rethrows the lowest failing index") {
    par::set_num_threads(4);
    try {
      par::for_each(100, [](std::size_t i) {
        if (i % 10 == 7) throw std::runtime_error(std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "7");
    }
    par::set_num_threads(0);
  }
}
