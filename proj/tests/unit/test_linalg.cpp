#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"

using namespace hopfoid;

namespace {

LinearMap random_map(std::size_t rows, std::size_t cols, double density, std::mt19937& rng) {
  const CycloField& f = cyclo_field(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> c(-3, 3);
  return LinearMap::from_function(rows, cols, [&](Index) {
    VecBuilder b;
    for (Index i = 0; i < rows; ++i)
      if (u(rng) < density) b.add(i, CycloScalar(f, {Rational(c(rng)), Rational(c(rng))}));
    return b.build();
  });
}

LinearMap permute_rows(const LinearMap& m, const std::vector<Index>& perm) {
  return LinearMap::from_function(m.rows(), m.cols(), [&](Index j) {
    VecBuilder b;
    for (const auto& [i, c] : m.column(j).terms()) b.add(perm[i], c);
    return b.build();
  });
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("sparse vectors merge and drop zeros") {
    const Vec v = Vec::from_terms({{3, Scalar(2)}, {1, Scalar(1)}, {3, Scalar(-2)}});
    CHECK(v == Vec::unit(1));
    CHECK((v - v).is_zero());
    CHECK(Vec::axpy(v, Scalar(3), Vec::unit(2)) == Vec::unit(1) + Vec::unit(2, Scalar(3)));
    CHECK(tensor(Vec::unit(1), Vec::unit(2), 5) == Vec::unit(7));
    CHECK(split_index(7, 5) == std::pair<Index, Index>{1, 2});
  }

  TEST_CASE("kernel of identity and of zero") {
    CHECK(kernel(LinearMap::identity(6)).dim() == 0);
    CHECK(kernel(LinearMap(3, 4)).dim() == 4);
    CHECK(rank(LinearMap(3, 4)) == 0);
    CHECK(inverse(LinearMap::identity(4)) == LinearMap::identity(4));
  }

  TEST_CASE("quotient of k^2 by the antidiagonal") {
    const Vec d = Vec::unit(0) - Vec::unit(1);
    Quotient q(Subspace::span(2, std::span(&d, 1)));
    CHECK(q.dim() == 1);
    CHECK(q.project(Vec::unit(0)) == q.project(Vec::unit(1)));
    CHECK(q.project(d).is_zero());
    CHECK(q.project(q.section(Vec::unit(0))) == Vec::unit(0));
    const Vec both = Vec::unit(0) + Vec::unit(1);
    Quotient qc(Subspace::span(2, std::span(&d, 1)), std::vector<Vec>{both});
    CHECK(qc.section(qc.project(Vec::unit(0))) == Scalar(Rational(1, 2)) * both);
    CHECK_THROWS_AS(Quotient(Subspace::span(2, std::span(&d, 1)), std::vector<Vec>{d}), std::invalid_argument);
  }

  TEST_CASE("rank agrees with the dense oracle") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 2 + rng() % 9, cols = 2 + rng() % 9;
      const LinearMap m = random_map(rows, cols, 0.3, rng);
      const std::size_t r = rank(m);
      CHECK(r == oracle::rank(m));
      const Subspace ker = kernel(m);
      CHECK(ker.dim() + r == cols);
      for (const Vec& v : ker.basis()) CHECK(m.apply(v).is_zero());
      CHECK(image(m).dim() == r);
      CHECK(rank(m.transpose()) == r);
    }
  }

  TEST_CASE("rank is invariant under row permutations") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const LinearMap m = random_map(7, 6, 0.35, rng);
      std::vector<Index> perm(7);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(rank(permute_rows(m, perm)) == rank(m));
    }
  }

  TEST_CASE("row reduced form is canonical") {
    std::mt19937 rng(13);
    const LinearMap m = random_map(8, 4, 0.5, rng);
    std::vector<Vec> cols = m.columns(), mixed;
    for (std::size_t i = 0; i < cols.size(); ++i) mixed.push_back(cols[i] + Scalar(2) * cols[(i + 1) % cols.size()]);
    std::reverse(mixed.begin(), mixed.end());
    if (rank(m) == 4) CHECK(Subspace::span(8, cols) == Subspace::span(8, mixed));
    const Subspace s = Subspace::span(8, cols);
    for (const Vec& c : cols) CHECK(s.contains(c));
  }

  TEST_CASE("inverse of random square maps") {
    std::mt19937 rng(17);
    int invertible = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const LinearMap m = random_map(5, 5, 0.6, rng);
      const auto inv = inverse(m);
      CHECK(inv.has_value() == (oracle::rank(m) == 5));
      if (!inv) continue;
      ++invertible;
      CHECK(m.compose(*inv) == LinearMap::identity(5));
      CHECK(inv->compose(m) == LinearMap::identity(5));
    }
    CHECK(invertible > 0);
  }

  TEST_CASE("Kronecker product acts factorwise") {
    std::mt19937 rng(19);
    const LinearMap a = random_map(3, 2, 0.6, rng), b = random_map(2, 4, 0.6, rng);
    const LinearMap ab = tensor(a, b);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 4; ++j)
        CHECK(ab.apply(tensor(Vec::unit(i), Vec::unit(j), 4)) == tensor(a.column(i), b.column(j), 2));
  }

  TEST_CASE("left ideal witness") {
    // span{e1} in k[x]/(x^2) with basis 1, x is an ideal; span{e0} is not
    auto mult = [](std::size_t g, const Vec& v) {
      VecBuilder b;
      for (const auto& [i, c] : v.terms())
        if (g + i < 2) b.add(static_cast<Index>(g + i), c);
      return b.build();
    };
    const Vec x = Vec::unit(1), one = Vec::unit(0);
    CHECK_FALSE(left_ideal_witness(Subspace::span(2, std::span(&x, 1)), 2, mult).has_value());
    const auto w = left_ideal_witness(Subspace::span(2, std::span(&one, 1)), 2, mult);
    REQUIRE(w.has_value());
    CHECK(w->first == 1);
  }

  TEST_CASE("counit of the slq2 algebroid has a 72-dimensional kernel") {
    const LinearMap& eps = oracle::slq2_d3().tower.algebroid.hopf.bi.counit;
    CHECK(eps.rows() == 9);
    CHECK(eps.cols() == 81);
    CHECK(kernel(eps).dim() == 81 - oracle::rank(eps));
    CHECK(kernel(eps).dim() == 72);
  }

  TEST_CASE("smash quotient H (x)_A H has dimension 729 with p gamma = id") {
    const Bialgebroid& b = oracle::slq2_d3().tower.algebroid.hopf.bi;
    CHECK(b.q2->ambient() == 81 * 81);
    CHECK(b.q2->dim() == 729);
    for (Index y = 0; y < b.q2->dim(); ++y) CHECK(b.q2->project(b.q2->lift(Vec::unit(y))) == Vec::unit(y));
  }
}
