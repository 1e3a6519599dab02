#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "hopfoid/suite.hpp"

using namespace hopfoid;

TEST_SUITE("examples") {
  TEST_CASE("normal form rewriting") {
    const QRoot q(cyclo_field(3));
    const QCommPresentation& p = slq2_A(q).pres;  // E = 0, K = 1
    CHECK(p.dim() == 9);
    CHECK(p.label(p.index({2, 1})) == "E^2K");
    CHECK(p.label(0) == "1");
    const NormalForm ke = normal_form(p, {1, 0});
    CHECK_FALSE(ke.zero);
    CHECK(ke.index == p.index({1, 1}));
    CHECK(ke.coeff == q.pow(2));
    const NormalForm kke = normal_form(p, {1, 1, 0});
    CHECK(kke.coeff == q.pow(4));
    CHECK(normal_form(p, {0, 0, 0}).zero);
    const NormalForm k3 = normal_form(p, {1, 1, 1});
    CHECK(k3.index == 0);
    CHECK(k3.coeff == Scalar(1));
    try {
      normal_form(p, {0, 7});
      FAIL("expected a rewrite failure");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("E #7") != std::string::npos);
    }
    const QCommPresentation& x = slq2_Astar(q).pres;
    CHECK(x.label(x.index({1, 2})) == "eta*kappa^2");
  }

  TEST_CASE("generator pairings at d = 3") {
    const Slq2Tower& t = oracle::slq2_d3();
    const DualPairing& p = *t.tower.pairing;
    const QRoot& q = t.q;
    const Vec kappa = Vec::unit(1), eta = Vec::unit(3);
    for (int n = 0; n < 3; ++n) {
      const Vec Kn = Vec::unit(static_cast<Index>(n)), En = Vec::unit(static_cast<Index>(n * 3));
      CHECK(p.pair(kappa, Kn) == q.pow(2 * n));
      CHECK(p.pair(eta, En) == Scalar(n == 1 ? 1 : 0));
      CHECK(p.pair(kappa, En) == Scalar(n == 0 ? 1 : 0));
      CHECK(p.pair(eta, Kn) == Scalar(n == 0 ? 0 : 0));
    }
    // <eta^2 kappa, E^2 K> = (2)! q^6 and q^6 = 1 at d = 3
    const Scalar fact2 = q.q_factorial(2);
    CHECK(fact2 == Scalar(1) + q.pow(2));
    CHECK(q.pow(6) == Scalar(1));
    CHECK(p.pair_basis(2 * 3 + 1, 2 * 3 + 1) == Scalar(1) + q.pow(2));
  }

  TEST_CASE("pairing matches the closed form on all pairs") {
    for (int e : {1, 2}) {
      const Slq2Tower t = e == 1 ? oracle::slq2_d3() : build_slq2(3, e);
      CHECK(verify_slq2_pairing(t).all_passed());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
              Scalar want;
              if (m == i) want = t.q.q_factorial(i) * t.q.pow(2 * j * (i + n));
              CHECK(t.tower.pairing->pair_basis(static_cast<Index>(i * 3 + j), static_cast<Index>(m * 3 + n)) == want);
            }
    }
  }

  TEST_CASE("build_slq2 preconditions") {
    CHECK_THROWS_AS(build_slq2(4), std::invalid_argument);
    CHECK_THROWS_AS(build_slq2(1), std::invalid_argument);
    CHECK_THROWS_AS(build_slq2(3, 3), std::invalid_argument);
  }

  TEST_CASE("printed formula ledger") {
    const auto ledger = verify_printed_formulas(oracle::slq2_d3());
    const auto& tags = documented_tags();
    std::vector<std::string> seen;
    for (const auto& e : ledger) {
      if (e.verdict == "pass") continue;
      REQUIRE_MESSAGE(e.verdict.rfind("documented:", 0) == 0, e.formula_id << ": " << e.verdict);
      const std::string tag = e.verdict.substr(11);
      CHECK_MESSAGE(std::find(tags.begin(), tags.end(), tag) != tags.end(), tag);
      seen.push_back(tag);
    }
    std::sort(seen.begin(), seen.end());
    std::vector<std::string> want = tags;
    std::sort(want.begin(), want.end());
    CHECK(seen == want);
    auto verdict = [&](const std::string& id) {
      for (const auto& e : ledger)
        if (e.formula_id == id) return e.verdict;
      return std::string("missing");
    };
    CHECK(verdict("heisenberg.kappa_d") == "pass");
    CHECK(verdict("heisenberg.E_d") == "pass");
    CHECK(verdict("heisenberg.kappa_d_zero") == "documented:kappa-d-zero");
    CHECK(verdict("Delta.display") == "documented:delta-first-factor");
    CHECK(verdict("Delta.expansion") == "pass");
    CHECK(verdict("beta.kappa") == "pass");
    CHECK(verdict("tau.kappa") == "pass");
    CHECK(verdict("theta.consistency") == "pass");
    CHECK(verdict("double.exchange") == "pass");
  }

  TEST_CASE("Heisenberg tower over k[Z/3]") {
    const auto [astar, pairing] = dual_hopf(group_algebra(3));
    const DoubleTower t = build_tower(pairing);
    CHECK(t.heisenberg->dim() == 9);
    const VerificationReport r = verify_tower(t, {});
    for (const auto* c : r.failures()) FAIL_CHECK(c->id);
    CHECK(r.all_passed());
  }

  TEST_CASE("suite configuration") {
    RunConfig c;
    c.d = 4;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.d = 3;
    c.strategy = Strategy::direct;
    CHECK_THROWS_AS(run_suite(c), ConfigError);
    c.example = "nope";
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = RunConfig{};
    c.example = "end";
    c.base_dim = 2;
    const SuiteRun run = run_suite(c);
    CHECK(run.strategy == Strategy::direct);
    CHECK(run.total_dim == 4);
    CHECK(run.report.all_passed());
  }
}
