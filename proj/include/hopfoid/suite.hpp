#pragma once

#include <stdexcept>
#include <string>

#include "hopfoid/examples.hpp"
#include "hopfoid/json_io.hpp"

namespace hopfoid {

/// Invalid run configuration; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string example = "slq2";  // coarse, end, slq2, heisenberg
  int d = 3;
  int q_exponent = 1;
  std::size_t base_dim = 3;
  Strategy strategy = Strategy::automatic;
  std::size_t direct_dim_bound = 100000;
  par::SweepPlan plan;
};

/// Throws ConfigError on an unknown example, a bad d or base dimension, or a
/// strategy the example cannot run.
void validate(const RunConfig& c);

struct SuiteRun {
  VerificationReport report;
  Strategy strategy = Strategy::automatic;  // as resolved
  std::size_t total_dim = 0;
};

/// Every check for the tower over one pairing: Hopf axioms of A, A* and D(A),
/// the pairing, the D(A) action and R condition, d0, the Heisenberg double and
/// its isomorphisms, and the smash Hopf algebroid.
VerificationReport verify_tower(const DoubleTower& t, const VerifyOptions& opts);

SuiteRun run_suite(const RunConfig& c);

/// Structure constants and structure-map matrices of the example.
Json dump_example(const RunConfig& c);

/// Config echo for report headers.
Json config_json(const RunConfig& c, const SuiteRun* run);

}  // namespace hopfoid
