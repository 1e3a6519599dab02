#include <doctest.h>

#include <random>

#include "oracle.hpp"

using namespace hopfoid;

namespace {

StructPtr share(StructAlgebra a) { return std::make_shared<StructAlgebra>(std::move(a)); }

/// Random linear map with f(1) = 1, entries in {-1, 0, 1}.
LinearMap random_unital(const StructAlgebra& a, const StructAlgebra& b, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-1, 1);
  LinearMap f = LinearMap::from_function(b.dim(), a.dim(), [&](Index) {
    VecBuilder v;
    for (Index i = 0; i < b.dim(); ++i) v.add(i, Scalar(c(rng)));
    return v.build();
  });
  const auto& unit = a.unit().terms();
  const auto& [u, cu] = unit.back();
  Vec rest = b.unit();
  for (const auto& [i, ci] : unit)
    if (i != u) rest -= ci * f.column(i);
  f.column(u) = cu.inverse() * rest;
  return f;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("catalogue algebras are associative and unital") {
    for (std::size_t d = 1; d <= 4; ++d) {
      const auto a = base_algebra(d);
      CHECK(a->dim() == d);
      CHECK_FALSE(associativity_witness(*a).has_value());
      CHECK_FALSE(unit_witness(*a).has_value());
    }
    CHECK_THROWS(base_algebra(5));
  }

  TEST_CASE("matrix units multiply as matrices") {
    const StructAlgebra m = StructAlgebra::matrix_algebra(3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j)
        for (Index k = 0; k < 3; ++k)
          for (Index l = 0; l < 3; ++l)
            CHECK(m.product(i * 3 + j, k * 3 + l) == (j == k ? Vec::unit(i * 3 + l) : Vec()));
  }

  TEST_CASE("a non-associative table is rejected with its triple") {
    // e1 e2 = e1 and all other non-unit products vanish: (e1 e2) e2 = e1 but e1 (e2 e2) = 0
    auto product = [](Index i, Index j) {
      if (i == 0) return Vec::unit(j);
      if (j == 0) return Vec::unit(i);
      return (i == 1 && j == 2) ? Vec::unit(1) : Vec();
    };
    try {
      StructAlgebra::from_products(3, product, Vec::unit(0));
      FAIL("expected AlgebraError");
    } catch (const AlgebraError& e) {
      CHECK(e.witness().size() == 3);
    }
  }

  TEST_CASE("a wrong unit is rejected") {
    CHECK_THROWS_AS(StructAlgebra::from_products(
                        2, [](Index i, Index j) { return i + j < 2 ? Vec::unit(i + j) : Vec(); }, Vec::unit(1)),
                    AlgebraError);
  }

  TEST_CASE("opposite algebras") {
    const auto dual = base_algebra(2);
    CHECK(opposite(*dual) == *dual);
    for (std::size_t d : {3, 4}) {
      const auto a = base_algebra(d);
      CHECK_FALSE(opposite(*a) == *a);
      CHECK(opposite(opposite(*a)) == *a);
      const StructAlgebra op = opposite(*a);
      for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) CHECK(op.product(i, j) == a->product(j, i));
    }
  }

  TEST_CASE("endomorphism and tensor algebras") {
    const StructAlgebra end = endo_algebra(*base_algebra(2));
    CHECK(end.dim() == 4);
    CHECK(end == StructAlgebra::matrix_algebra(2));
    const auto m2 = base_algebra(4);
    const StructAlgebra t = tensor_alg(*m2, opposite(*m2));
    CHECK(t.dim() == 16);
    CHECK_FALSE(associativity_witness(t).has_value());
    const TensorAlgebra lazy({m2, share(opposite(*m2))});
    CHECK(StructAlgebra::materialize(lazy) == t);
    CHECK(lazy.join(lazy.split(11)) == 11);
  }

  TEST_CASE("morphism witnesses") {
    const auto m2 = base_algebra(4);
    CHECK_FALSE(morphism_witness({m2, m2, LinearMap::identity(4), false}).has_value());
    // transpose E_ij -> E_ji reverses products
    const LinearMap transpose = LinearMap::from_function(4, 4, [](Index k) { return Vec::unit((k % 2) * 2 + k / 2); });
    CHECK_FALSE(morphism_witness({m2, m2, transpose, true}).has_value());
    const auto w = morphism_witness({m2, m2, transpose, false});
    REQUIRE(w.has_value());
    CHECK_FALSE(w->indices.empty());
  }

  TEST_CASE("homomorphism iff the kernel is a left ideal") {
    std::mt19937 rng(23);
    const std::vector<StructPtr> algs = {base_algebra(1), base_algebra(2), base_algebra(3), base_algebra(4)};
    int homs = 0, non_homs = 0;
    auto check = [&](const StructPtr& a, const StructPtr& b, const LinearMap& f) {
      const KernelCriterion k = hom_kernel_ideal_check(a, b, f);
      CHECK(k.homomorphism == k.kernel_left_ideal);
      CHECK(k.homomorphism == !morphism_witness({a, b, f, false}).has_value());
      (k.homomorphism ? homs : non_homs)++;
    };
    for (int trial = 0; trial < 50; ++trial) {
      const StructPtr& a = algs[1 + rng() % 3];
      const StructPtr& b = algs[rng() % 4];
      check(a, b, random_unital(*a, *b, rng));
    }
    // known homomorphisms: identities, the inclusion T2 -> M2, characters
    for (const auto& a : algs) check(a, a, LinearMap::identity(a->dim()));
    check(algs[2], algs[3], LinearMap::from_function(4, 3, [](Index i) { return Vec::unit(i == 0 ? 0 : i == 1 ? 1 : 3); }));
    check(algs[2], algs[0], LinearMap::from_function(1, 3, [](Index i) { return i == 0 ? Vec::unit(0) : Vec(); }));
    check(algs[1], algs[0], LinearMap::from_function(1, 2, [](Index i) { return i == 0 ? Vec::unit(0) : Vec(); }));
    CHECK(homs >= 6);
    CHECK(non_homs > 0);
    CHECK_THROWS_AS(hom_kernel_ideal_check(algs[1], algs[1], LinearMap(2, 2)), std::invalid_argument);
  }
}
