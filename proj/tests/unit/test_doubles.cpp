#include <doctest.h>

#include "oracle.hpp"

using namespace hopfoid;

namespace {

void check_all_pass(const VerificationReport& r) {
  for (const auto* c : r.failures()) FAIL_CHECK(c->id << ": " << (c->witness ? c->witness->note : ""));
  CHECK(r.all_passed());
}

Vec mono(int first, int second) { return Vec::unit(static_cast<Index>(first * 3 + ((second % 3) + 3) % 3)); }

}  // namespace

TEST_SUITE("doubles") {
  TEST_CASE("the double of k is k") {
    const auto [kd, kp] = dual_hopf(group_algebra(1));
    const DrinfeldDouble D(kp);
    CHECK(D.dim() == 1);
    CHECK(D.R() == Vec::unit(0));
    CHECK(d0_build(D).d0 == Vec::unit(0));
    check_all_pass(verify_double(D));
  }

  TEST_CASE("D(A) at d = 3") {
    const Slq2Tower& t = oracle::slq2_d3();
    const DrinfeldDouble& D = *t.tower.dbl;
    const QRoot& q = t.q;
    CHECK(D.dim() == 81);
    check_all_pass(verify_double(D));
    const Vec E = D.from_A(mono(1, 0)), K = D.from_A(mono(0, 1));
    const Vec eta = D.from_Astar(mono(1, 0)), kappa = D.from_Astar(mono(0, 1));
    const HopfAlgebra& H = D.hopf();
    CHECK(H.mul(K, kappa) == H.mul(kappa, K));
    CHECK(H.mul(E, kappa) == q.pow(-2) * H.mul(kappa, E));
    CHECK(H.mul(K, eta) == q.pow(-2) * H.mul(eta, K));
    CHECK(H.mul(E, eta) == q.pow(-2) * (H.mul(eta, E) + H.mul(kappa, K) - H.one()));
  }

  TEST_CASE("R against its expansion in E, K, eta, kappa") {
    const Slq2Tower& t = oracle::slq2_d3();
    const DrinfeldDouble& D = *t.tower.dbl;
    const QRoot& q = t.q;
    VecBuilder r;
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n)
        for (int j = 0; j < 3; ++j) {
          Scalar fact(1);
          for (int k = 1; k <= m; ++k) fact *= (q.pow(2 * k) - Scalar(1)) / (q.pow(2) - Scalar(1));
          const Scalar c = Scalar(Rational(1, 3)) * fact.inverse() * q.pow(-2 * j * (m + n));
          r.add_tensor(D.from_A(mono(m, n)), D.from_Astar(mono(m, j)), 81, c);
        }
    CHECK(D.R() == r.build());
  }

  TEST_CASE("D(A) action on A* restricts to the regular and adjoint actions") {
    const Slq2Tower& t = oracle::slq2_d3();
    const DrinfeldDouble& D = *t.tower.dbl;
    const DualPairing& p = D.pairing();
    const ModuleAction& act = t.tower.action;
    CHECK(act.matrix(D.hopf().one()) == LinearMap::identity(9));
    for (Index u = 0; u < 9; ++u)
      for (Index y = 0; y < 9; ++y) {
        CHECK(act.act(D.from_A(Vec::unit(u)), Vec::unit(y)) == p.rharpoon(Vec::unit(u), Vec::unit(y)));
        CHECK(act.act(D.from_Astar(Vec::unit(u)), Vec::unit(y)) == p.ad(Vec::unit(u), Vec::unit(y)));
      }
    check_all_pass(verify_module_algebra(act));
  }

  TEST_CASE("R condition") {
    const Slq2Tower& t = oracle::slq2_d3();
    const DrinfeldDouble& D = *t.tower.dbl;
    CHECK_FALSE(r_condition_witness(t.tower.action, D.R()).has_value());
    CHECK_FALSE(r21r_witness(D, t.tower.action).has_value());

    // trivial module k
    const auto k = base_algebra(1);
    ModuleAction trivial{D.hopf_ptr(), k, {}};
    for (Index g = 0; g < 81; ++g) trivial.table.push_back(D.hopf().eps_basis(g) * Vec::unit(0));
    CHECK_FALSE(r_condition_witness(trivial, D.R()).has_value());

    // regular piece only: (x (x) a) . y = e(x) (a -> y)
    const DualPairing& p = D.pairing();
    ModuleAction regular{D.hopf_ptr(), p.Astar().alg_ptr(), {}};
    for (Index g = 0; g < 81; ++g) {
      auto [x, a] = split_index(g, 9);
      for (Index y = 0; y < 9; ++y)
        regular.table.push_back(p.Astar().eps_basis(x) * p.rharpoon(Vec::unit(a), Vec::unit(y)));
    }
    const auto w = r_condition_witness(regular, D.R());
    REQUIRE(w.has_value());
    // the witness really violates the identity
    REQUIRE(w->indices.size() == 2);
    const Index u = w->indices[0], v = w->indices[1];
    VecBuilder lhs;
    for (const auto& [k2, c] : D.R().terms()) {
      auto [g1, g2] = split_index(k2, 81);
      lhs.add_scaled(p.Astar().mul(regular.act(Vec::unit(g2), Vec::unit(v)), regular.act(Vec::unit(g1), Vec::unit(u))),
                     c);
    }
    CHECK(lhs.build() != p.Astar().alg().product(u, v));
  }

  TEST_CASE("smash products") {
    const Slq2Tower& t = oracle::slq2_d3();
    const SmashProduct& h = *t.tower.heisenberg;
    const QRoot& q = t.q;
    CHECK(h.dim() == 81);
    check_all_pass(verify_smash(h));
    const Vec E = h.from_A(mono(1, 0)), K = h.from_A(mono(0, 1));
    const Vec eta = h.from_V(mono(1, 0)), kappa = h.from_V(mono(0, 1));
    const StructAlgebra& H = h.alg();
    CHECK(H.mul(K, kappa) == q.pow(2) * H.mul(kappa, K));
    CHECK(H.mul(E, eta) == H.mul(eta, E) + H.mul(kappa, K));

    // V # k = V
    const auto k = group_algebra(1);
    const auto v = base_algebra(4);
    std::vector<Vec> act;
    for (Index i = 0; i < 4; ++i) act.push_back(Vec::unit(i));
    const SmashProduct trivial(v, k, act);
    CHECK(trivial.alg() == *v);
  }

  TEST_CASE("d0 at d = 3") {
    const Slq2Tower& t = oracle::slq2_d3();
    const DrinfeldDouble& D = *t.tower.dbl;
    const SpecialElement& s = t.tower.algebroid.d0;
    CHECK(D.hopf().mul(s.d0, s.d0_inv) == D.hopf().one());
    check_all_pass(verify_d0(D, s, &t.tower.action));
    const LinearMap theta = t.tower.action.matrix(s.d0);
    CHECK(theta.apply(mono(0, 1)) == t.q.pow(2) * mono(0, 1));
    CHECK(theta.apply(mono(1, 0)) == mono(1, 0));
  }

  TEST_CASE("coproduct of d0 against the full product in D (x) D") {
    const Slq2Tower& t = oracle::slq2_d3();
    const DrinfeldDouble& D = *t.tower.dbl;
    const SpecialElement& s = t.tower.algebroid.d0;
    const TensorAlgebra& sq = D.hopf().square();
    CHECK(D.hopf().delta(s.d0) == sq.mul(sq.mul(D.R21(), D.R()), tensor(s.d0, s.d0, 81)));
    CHECK_FALSE(d0_coproduct_witness(D, s).has_value());
    const SpecialElement doubled{Scalar(2) * s.d0, s.d0_inv};
    CHECK(d0_coproduct_witness(D, doubled).has_value());
    SpecialElement shifted = s;
    shifted.d0 = s.d0 + D.hopf().one();
    CHECK(d0_coproduct_witness(D, shifted).has_value());
  }

  TEST_CASE("T1 identifies H(A*) with End(A*)") {
    const Slq2Tower& t = oracle::slq2_d3();
    const SmashProduct& h = *t.tower.heisenberg;
    const LinearMap t1 = h.t1();
    CHECK(t1.rows() == 81);
    CHECK(oracle::rank(t1) == 81);
    const Vec id = as_matrix_units(LinearMap::identity(9));
    CHECK(t1.apply(heisenberg_preimage(h, *t.tower.pairing, id)) == id);
    check_all_pass(verify_t1_isomorphism(h, *t.tower.pairing));
  }

  TEST_CASE("D(A) -> H(A*) composed with T1 is the action on A*") {
    const Slq2Tower& t = oracle::slq2_d3();
    const DrinfeldDouble& D = *t.tower.dbl;
    const SmashProduct& h = *t.tower.heisenberg;
    const LinearMap f = double_to_heisenberg(D, h);
    CHECK(f.apply(D.hopf().one()) == h.alg().unit());
    const LinearMap t1 = h.t1();
    for (Index g = 0; g < 81; ++g) {
      const Vec m = t1.apply(f.column(g));
      for (Index y = 0; y < 9; ++y) CHECK(apply_matrix_units(m, Vec::unit(y), 9) == t.tower.action.act_basis(g, y));
    }
    check_all_pass(verify_double_to_heisenberg(D, h, t.tower.action));
  }
}
