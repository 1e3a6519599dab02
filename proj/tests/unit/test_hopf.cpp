#include <doctest.h>

#include "oracle.hpp"

using namespace hopfoid;

namespace {

void check_all_pass(const VerificationReport& r) {
  for (const auto* c : r.failures()) FAIL_CHECK(c->id << ": " << (c->witness ? c->witness->note : ""));
  CHECK(r.all_passed());
}

Vec mono(int d, int first, int second) { return Vec::unit(static_cast<Index>(first * d + ((second % d) + d) % d)); }

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("group algebra of Z/3") {
    const HopfPtr g = group_algebra(3);
    CHECK(g->dim() == 3);
    check_all_pass(verify_hopf(*g));
    CHECK(g->delta_basis(1) == tensor(Vec::unit(1), Vec::unit(1), 3));
    CHECK(g->S(Vec::unit(1)) == Vec::unit(2));
  }

  TEST_CASE("the two slq2 Hopf algebras at d = 3") {
    const QRoot q(cyclo_field(3));
    check_all_pass(verify_hopf(*slq2_A(q).hopf));
    check_all_pass(verify_hopf(*slq2_Astar(q).hopf));
  }

  TEST_CASE("identity in place of the antipode is caught") {
    const QRoot q(cyclo_field(3));
    const HopfPtr a = slq2_A(q).hopf;
    const HopfAlgebra broken(a->alg_ptr(), a->coproduct(), a->counit(), LinearMap::identity(a->dim()));
    const VerificationReport r = verify_hopf(broken);
    const CheckResult* c = r.find("antipode");
    REQUIRE(c != nullptr);
    CHECK(c->status == Status::fail);
    REQUIRE(c->witness.has_value());
    // K is the lowest-index failure; E fails as well by direct evaluation
    CHECK(c->witness->labels.front() == "K");
    const Vec E = mono(3, 1, 0);
    VecBuilder m;
    for (const auto& [k, coeff] : a->delta(E).terms()) {
      auto [x, y] = split_index(k, 9);
      m.add_scaled(a->mul(Vec::unit(x), Vec::unit(y)), coeff);
    }
    CHECK(m.build() != a->eps(E) * a->one());
  }

  TEST_CASE("a non-coassociative coproduct is caught") {
    const HopfPtr g = group_algebra(3);
    LinearMap delta = g->coproduct();
    delta.column(1) = tensor(Vec::unit(1), Vec::unit(2), 3);
    const HopfAlgebra broken(g->alg_ptr(), delta, g->counit(), g->antipode());
    const VerificationReport r = verify_hopf(broken);
    CHECK_FALSE(r.all_passed());
    CHECK(r.find("counit")->status == Status::fail);
  }

  TEST_CASE("duals") {
    const HopfPtr k = group_algebra(1);
    const auto [kd, kp] = dual_hopf(k);
    CHECK(kd->dim() == 1);
    CHECK(kd->alg() == k->alg());

    const QRoot q(cyclo_field(3));
    const HopfPtr a = slq2_A(q).hopf;
    const auto [ad, ap] = dual_hopf(a);
    check_all_pass(verify_hopf(*ad));
    check_all_pass(verify_pairing(*ap));
    for (Index x = 0; x < 9; ++x)
      for (Index y = 0; y < 9; ++y) CHECK(ap->pair_basis(x, y) == Scalar(x == y ? 1 : 0));

    // double dual has the same structure constants
    const auto [add, app] = dual_hopf(ad);
    CHECK(add->alg() == a->alg());
    CHECK(add->coproduct() == a->coproduct());
    CHECK(add->antipode() == a->antipode());
  }

  TEST_CASE("the closed-form pairing identifies the presented A* with the dual of A") {
    const int d = 3;
    const QRoot q(cyclo_field(d));
    const PresentedHopf a = slq2_A(q), x = slq2_Astar(q);
    const auto [dual, p] = dual_hopf(a.hopf);
    // phi(eta^i kappa^j) = sum_a <eta^i kappa^j, a> a^dual
    const LinearMap phi = LinearMap::from_function(9, 9, [&](Index xi) {
      VecBuilder b;
      for (Index ai = 0; ai < 9; ++ai) {
        auto [i, j] = split_index(xi, d);
        auto [m, n] = split_index(ai, d);
        b.add(ai, slq2_pairing_closed_form(q, static_cast<int>(i), static_cast<int>(j), static_cast<int>(m),
                                            static_cast<int>(n)));
      }
      return b.build();
    });
    CHECK(rank(phi) == 9);
    for (Index u = 0; u < 9; ++u) {
      for (Index v = 0; v < 9; ++v)
        CHECK(phi.apply(x.hopf->alg().product(u, v)) == dual->mul(phi.column(u), phi.column(v)));
      CHECK(tensor(phi, phi).apply(x.hopf->delta_basis(u)) == dual->delta(phi.column(u)));
    }
    CHECK(phi.apply(x.hopf->one()) == dual->one());
  }

  TEST_CASE("harpoon actions on the generators") {
    const int d = 3;
    const Slq2Tower& t = oracle::slq2_d3();
    const DualPairing& p = *t.tower.pairing;
    const Vec one_a = p.A().one(), K = mono(d, 0, 1), E = mono(d, 1, 0);
    const Vec kappa = mono(d, 0, 1), eta = mono(d, 1, 0);
    for (Index x = 0; x < 9; ++x) CHECK(p.rharpoon(one_a, Vec::unit(x)) == Vec::unit(x));
    CHECK(p.rharpoon(K, kappa) == t.q.pow(2) * kappa);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Vec want = i == 0 ? Vec() : t.q.q_int(i) * t.q.pow(2 * (j - i + 1)) * mono(d, i - 1, j + 1);
        CHECK(p.rharpoon(E, mono(d, i, j)) == want);
      }
    for (Index x = 0; x < 9; ++x) CHECK(p.coadjoint_left(one_a, Vec::unit(x)) == Vec::unit(x));
    for (Index a = 0; a < 9; ++a) CHECK(p.coadjoint_right(Vec::unit(a), p.Astar().one()) == Vec::unit(a));
    CHECK(p.ad(eta, kappa) == (Scalar(1) - t.q.pow(-2)) * eta);
  }

  TEST_CASE("left regular action makes A* a module algebra") {
    const DualPairing& p = *oracle::slq2_d3().tower.pairing;
    const HopfAlgebra& A = p.A();
    const HopfAlgebra& X = p.Astar();
    for (Index a = 0; a < 9; ++a)
      for (Index x = 0; x < 9; ++x)
        for (Index y = 0; y < 9; ++y) {
          VecBuilder rhs;
          for (const auto& [k, c] : A.delta_basis(a).terms()) {
            auto [a1, a2] = split_index(k, 9);
            rhs.add_scaled(X.mul(p.rharpoon(Vec::unit(a1), Vec::unit(x)), p.rharpoon(Vec::unit(a2), Vec::unit(y))), c);
          }
          CHECK(p.rharpoon(Vec::unit(a), X.alg().product(x, y)) == rhs.build());
        }
  }
}
