#include "hopfoid/hopf.hpp"

namespace hopfoid {

namespace {

std::string pair_note(const Algebra& a, Index i, Index j) { return a.label(i) + ", " + a.label(j); }

std::optional<Witness> first_pair(const Algebra& alg, const par::SweepPlan& plan,
                                  const std::function<bool(Index, Index)>& fails, const std::string& what) {
  const std::size_t n = alg.dim();
  auto bad = par::first_failure(n * n, plan, [&](std::size_t k) {
    return fails(static_cast<Index>(k / n), static_cast<Index>(k % n));
  });
  if (!bad) return std::nullopt;
  const Index i = static_cast<Index>(*bad / n), j = static_cast<Index>(*bad % n);
  return Witness{{i, j}, {alg.label(i), alg.label(j)}, what + " at " + pair_note(alg, i, j)};
}

std::optional<Witness> first_single(const Algebra& alg, const std::function<bool(Index)>& fails,
                                    const std::string& what) {
  auto bad = par::first_failure(alg.dim(), [&](std::size_t k) { return fails(static_cast<Index>(k)); });
  if (!bad) return std::nullopt;
  const Index i = static_cast<Index>(*bad);
  return Witness{{i}, {alg.label(i)}, what + " at " + alg.label(i)};
}

}  // namespace

HopfAlgebra::HopfAlgebra(std::shared_ptr<const StructAlgebra> alg, LinearMap coproduct, LinearMap counit,
                         LinearMap antipode)
    : alg_(std::move(alg)),
      coproduct_(std::move(coproduct)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = alg_->dim();
  if (coproduct_.rows() != n * n || coproduct_.cols() != n) throw std::invalid_argument("coproduct has wrong shape");
  if (counit_.rows() != 1 || counit_.cols() != n) throw std::invalid_argument("counit has wrong shape");
  if (antipode_.rows() != n || antipode_.cols() != n) throw std::invalid_argument("antipode has wrong shape");
  auto inv = inverse(antipode_);
  if (!inv) throw std::invalid_argument("antipode is not invertible");
  antipode_inv_ = std::move(*inv);
  square_ = std::make_shared<TensorAlgebra>(std::vector<AlgebraPtr>{alg_, alg_});
}

HopfAlgebra HopfAlgebra::from_generators(std::shared_ptr<const StructAlgebra> alg,
                                         const std::vector<std::vector<std::size_t>>& words,
                                         const std::vector<Generator>& gens) {
  const std::size_t n = alg->dim();
  if (words.size() != n) throw std::invalid_argument("one word per basis element is required");
  TensorAlgebra sq({alg, alg});
  std::vector<Vec> delta(n), anti(n);
  std::vector<Vec> eps(n);
  par::for_each(n, [&](std::size_t i) {
    Vec e = alg->unit(), d = sq.unit(), s = alg->unit();
    Scalar c(1);
    for (std::size_t g : words[i]) {
      e = alg->mul(e, gens[g].element);
      d = sq.mul(d, gens[g].coproduct);
      c *= gens[g].counit;
      s = alg->mul(gens[g].antipode, s);
    }
    if (e != Vec::unit(static_cast<Index>(i)))
      throw std::invalid_argument("generator word does not multiply out to basis element " + alg->label(i));
    delta[i] = std::move(d);
    anti[i] = std::move(s);
    eps[i] = c.is_zero() ? Vec() : Vec::unit(0, c);
  });
  return HopfAlgebra(std::move(alg), LinearMap(n * n, std::move(delta)), LinearMap(1, std::move(eps)),
                     LinearMap(n, std::move(anti)));
}

Scalar HopfAlgebra::eps(const Vec& x) const {
  Scalar s;
  for (const auto& [i, c] : x.terms()) s.add_product(c, eps_basis(i));
  return s;
}

VerificationReport verify_hopf(const HopfAlgebra& h, const par::SweepPlan& plan, const std::string& prefix) {
  VerificationReport r;
  const StructAlgebra& alg = h.alg();
  const std::size_t n = h.dim();

  r.add(run_check(prefix + "associativity", "product is associative on basis triples", "(xy)z = x(yz)",
                  [&] { return associativity_witness(alg, plan); }));
  r.add(run_check(prefix + "unit", "unit laws", "1x = x1 = x", [&] { return unit_witness(alg); }));

  r.add(run_check(prefix + "coassociativity", "coproduct is coassociative", "(D (x) id) D = (id (x) D) D", [&] {
    return first_single(
        alg,
        [&](Index i) {
          VecBuilder lhs, rhs;
          for (const auto& [k, c] : h.delta_basis(i).terms()) {
            auto [a, b] = split_index(k, n);
            lhs.add_tensor(h.delta_basis(a), Vec::unit(b), n, c);
            rhs.add_tensor(Vec::unit(a), h.delta_basis(b), n * n, c);
          }
          return lhs.build() != rhs.build();
        },
        "coassociativity fails");
  }));

  r.add(run_check(prefix + "counit", "counit axiom", "(e (x) id) D = (id (x) e) D = id", [&] {
    return first_single(
        alg,
        [&](Index i) {
          VecBuilder left, right;
          for (const auto& [k, c] : h.delta_basis(i).terms()) {
            auto [a, b] = split_index(k, n);
            left.add(b, c * h.eps_basis(a));
            right.add(a, c * h.eps_basis(b));
          }
          const Vec e = Vec::unit(i);
          return left.build() != e || right.build() != e;
        },
        "counit axiom fails");
  }));

  r.add(run_check(prefix + "coproduct_multiplicative", "coproduct is an algebra map", "D(xy) = D(x) D(y), D(1) = 1 (x) 1",
                  [&]() -> std::optional<Witness> {
                    if (h.delta(h.one()) != h.square().unit()) return Witness{{}, {}, "D(1) != 1 (x) 1"};
                    return first_pair(
                        alg, plan,
                        [&](Index i, Index j) {
                          return h.delta(alg.product(i, j)) != h.square().mul(h.delta_basis(i), h.delta_basis(j));
                        },
                        "D(xy) != D(x)D(y)");
                  }));

  r.add(run_check(prefix + "counit_multiplicative", "counit is an algebra map", "e(xy) = e(x) e(y), e(1) = 1",
                  [&]() -> std::optional<Witness> {
                    if (!h.eps(h.one()).is_one()) return Witness{{}, {}, "e(1) != 1"};
                    return first_pair(
                        alg, plan,
                        [&](Index i, Index j) { return h.eps(alg.product(i, j)) != h.eps_basis(i) * h.eps_basis(j); },
                        "e(xy) != e(x)e(y)");
                  }));

  r.add(run_check(prefix + "antipode", "antipode axiom", "m(S (x) id) D = m(id (x) S) D = 1 e", [&] {
    return first_single(
        alg,
        [&](Index i) {
          VecBuilder left, right;
          for (const auto& [k, c] : h.delta_basis(i).terms()) {
            auto [a, b] = split_index(k, n);
            left.add_scaled(alg.mul(h.antipode().column(a), Vec::unit(b)), c);
            right.add_scaled(alg.mul(Vec::unit(a), h.antipode().column(b)), c);
          }
          const Vec target = h.eps_basis(i) * h.one();
          return left.build() != target || right.build() != target;
        },
        "antipode axiom fails");
  }));

  r.add(run_check(prefix + "antipode_antimultiplicative", "antipode reverses products", "S(xy) = S(y) S(x)", [&] {
    return first_pair(
        alg, plan,
        [&](Index i, Index j) {
          return h.S(alg.product(i, j)) != alg.mul(h.antipode().column(j), h.antipode().column(i));
        },
        "S(xy) != S(y)S(x)");
  }));

  r.add(run_check(prefix + "antipode_invertible", "antipode is bijective", "S S^-1 = S^-1 S = id",
                  [&]() -> std::optional<Witness> {
                    const auto id = LinearMap::identity(n);
                    if (h.antipode().compose(h.antipode_inverse()) != id ||
                        h.antipode_inverse().compose(h.antipode()) != id)
                      return Witness{{}, {}, "S^-1 is not a two-sided inverse"};
                    return std::nullopt;
                  }));
  return r;
}

DualPairing::DualPairing(HopfPtr a, HopfPtr astar, LinearMap matrix)
    : a_(std::move(a)), astar_(std::move(astar)), n_(a_->dim()) {
  if (astar_->dim() != n_ || matrix.rows() != n_ || matrix.cols() != n_)
    throw std::invalid_argument("pairing dimensions do not match");
  p_.resize(n_ * n_);
  for (Index j = 0; j < n_; ++j)
    for (const auto& [i, c] : matrix.column(j).terms()) p_[static_cast<std::size_t>(i) * n_ + j] = c;
  auto inv = inverse(matrix);
  if (!inv) throw std::invalid_argument("pairing is degenerate");
  dual_ = inv->row_vectors();

  const std::size_t n = n_;
  const HopfAlgebra& A = *a_;
  const HopfAlgebra& X = *astar_;
  auto table = [&](const std::function<Vec(Index, Index)>& f) {
    return par::map<Vec>(n * n, [&](std::size_t k) { return f(static_cast<Index>(k / n), static_cast<Index>(k % n)); });
  };
  rh_ = table([&](Index a, Index x) {
    VecBuilder b;
    for (const auto& [k, c] : X.delta_basis(x).terms()) {
      auto [x1, x2] = split_index(k, n);
      b.add(x1, c * pair_basis(x2, a));
    }
    return b.build();
  });
  lh_ = table([&](Index x, Index a) {
    VecBuilder b;
    for (const auto& [k, c] : X.delta_basis(x).terms()) {
      auto [x1, x2] = split_index(k, n);
      b.add(x2, c * pair_basis(x1, a));
    }
    return b.build();
  });
  xa_ = table([&](Index x, Index a) {
    VecBuilder b;
    for (const auto& [k, c] : A.delta_basis(a).terms()) {
      auto [a1, a2] = split_index(k, n);
      b.add(a1, c * pair_basis(x, a2));
    }
    return b.build();
  });
  ax_ = table([&](Index a, Index x) {
    VecBuilder b;
    for (const auto& [k, c] : A.delta_basis(a).terms()) {
      auto [a1, a2] = split_index(k, n);
      b.add(a2, c * pair_basis(x, a1));
    }
    return b.build();
  });
  cl_ = table([&](Index a, Index x) {
    VecBuilder b;
    for (const auto& [k, c] : A.delta_basis(a).terms()) {
      auto [a1, a2] = split_index(k, n);
      b.add_scaled(lharpoon(rh_[a1 * n + x], A.antipode_inverse().column(a2)), c);
    }
    return b.build();
  });
  cr_ = table([&](Index a, Index x) {
    VecBuilder b;
    for (const auto& [k, c] : X.delta_basis(x).terms()) {
      auto [x1, x2] = split_index(k, n);
      b.add_scaled(rharpoon_on_A(X.antipode_inverse().column(x1), ax_[a * n + x2]), c);
    }
    return b.build();
  });
  ad_ = table([&](Index x, Index y) {
    VecBuilder b;
    for (const auto& [k, c] : X.delta_basis(x).terms()) {
      auto [x1, x2] = split_index(k, n);
      b.add_scaled(X.mul(X.alg().product(x2, y), X.antipode_inverse().column(x1)), c);
    }
    return b.build();
  });
}

template <class Table>
Vec DualPairing::bilinear(const Table& table, const Vec& u, const Vec& v) const {
  VecBuilder b;
  for (const auto& [i, ci] : u.terms())
    for (const auto& [j, cj] : v.terms()) b.add_scaled(table[static_cast<std::size_t>(i) * n_ + j], ci * cj);
  return b.build();
}

Scalar DualPairing::pair(const Vec& x, const Vec& a) const {
  Scalar s;
  for (const auto& [i, ci] : x.terms())
    for (const auto& [j, cj] : a.terms()) s.add_product(ci * cj, pair_basis(i, j));
  return s;
}

Vec DualPairing::rharpoon(const Vec& a, const Vec& x) const { return bilinear(rh_, a, x); }
Vec DualPairing::lharpoon(const Vec& x, const Vec& a) const { return bilinear(lh_, x, a); }
Vec DualPairing::rharpoon_on_A(const Vec& x, const Vec& a) const { return bilinear(xa_, x, a); }
Vec DualPairing::lharpoon_on_A(const Vec& a, const Vec& x) const { return bilinear(ax_, a, x); }
Vec DualPairing::coadjoint_left(const Vec& a, const Vec& x) const { return bilinear(cl_, a, x); }
Vec DualPairing::coadjoint_right(const Vec& a, const Vec& x) const { return bilinear(cr_, a, x); }
Vec DualPairing::ad(const Vec& x, const Vec& y) const { return bilinear(ad_, x, y); }

VerificationReport verify_pairing(const DualPairing& p, const par::SweepPlan& plan, const std::string& prefix) {
  VerificationReport r;
  const HopfAlgebra& A = p.A();
  const HopfAlgebra& X = p.Astar();
  const std::size_t n = p.dim();

  r.add(run_check(prefix + "product", "product of A* is dual to the coproduct of A", "<xy, a> = <x (x) y, D a>", [&] {
    return first_pair(
        X.alg(), plan,
        [&](Index i, Index j) {
          const Vec xy = X.alg().product(i, j);
          for (Index a = 0; a < n; ++a) {
            Scalar rhs;
            for (const auto& [k, c] : A.delta_basis(a).terms()) {
              auto [a1, a2] = split_index(k, n);
              rhs.add_product(c, p.pair_basis(i, a1) * p.pair_basis(j, a2));
            }
            if (p.pair(xy, Vec::unit(a)) != rhs) return true;
          }
          return false;
        },
        "<xy, a> mismatch");
  }));

  r.add(run_check(prefix + "coproduct", "coproduct of A* is dual to the product of A", "<x, ab> = <D x, a (x) b>", [&] {
    return first_pair(
        A.alg(), plan,
        [&](Index i, Index j) {
          const Vec ab = A.alg().product(i, j);
          for (Index x = 0; x < n; ++x) {
            Scalar rhs;
            for (const auto& [k, c] : X.delta_basis(x).terms()) {
              auto [x1, x2] = split_index(k, n);
              rhs.add_product(c, p.pair_basis(x1, i) * p.pair_basis(x2, j));
            }
            if (p.pair(Vec::unit(x), ab) != rhs) return true;
          }
          return false;
        },
        "<x, ab> mismatch");
  }));

  r.add(run_check(prefix + "unit_counit", "units pair with counits", "<1, a> = e(a), <x, 1> = e(x)",
                  [&]() -> std::optional<Witness> {
                    for (Index i = 0; i < n; ++i) {
                      if (p.pair(X.one(), Vec::unit(i)) != A.eps_basis(i))
                        return Witness{{i}, {A.alg().label(i)}, "<1, a> != e(a)"};
                      if (p.pair(Vec::unit(i), A.one()) != X.eps_basis(i))
                        return Witness{{i}, {X.alg().label(i)}, "<x, 1> != e(x)"};
                    }
                    return std::nullopt;
                  }));

  r.add(run_check(prefix + "antipode", "antipodes are adjoint", "<S x, a> = <x, S a>", [&] {
    return first_pair(
        X.alg(), plan,
        [&](Index x, Index a) {
          return p.pair(X.antipode().column(x), Vec::unit(a)) != p.pair(Vec::unit(x), A.antipode().column(a));
        },
        "<Sx, a> != <x, Sa>");
  }));

  r.add(run_check(prefix + "rharpoon_action", "a -> x is a left action of A", "(ab) -> x = a -> (b -> x), 1 -> x = x",
                  [&]() -> std::optional<Witness> {
                    for (Index x = 0; x < n; ++x)
                      if (p.rharpoon(A.one(), Vec::unit(x)) != Vec::unit(x))
                        return Witness{{x}, {X.alg().label(x)}, "1 -> x != x"};
                    return first_pair(
                        A.alg(), plan,
                        [&](Index a, Index b) {
                          for (Index x = 0; x < n; ++x)
                            if (p.rharpoon(A.alg().product(a, b), Vec::unit(x)) !=
                                p.rharpoon(Vec::unit(a), p.rharpoon_basis(b, x)))
                              return true;
                          return false;
                        },
                        "(ab) -> x != a -> (b -> x)");
                  }));

  r.add(run_check(prefix + "rharpoon_module_algebra", "A* is a left A-module algebra under ->",
                  "a -> (xy) = (a(1) -> x)(a(2) -> y)", [&] {
                    return first_pair(
                        X.alg(), plan,
                        [&](Index x, Index y) {
                          const Vec xy = X.alg().product(x, y);
                          for (Index a = 0; a < n; ++a) {
                            VecBuilder rhs;
                            for (const auto& [k, c] : A.delta_basis(a).terms()) {
                              auto [a1, a2] = split_index(k, n);
                              rhs.add_scaled(X.mul(p.rharpoon_basis(a1, x), p.rharpoon_basis(a2, y)), c);
                            }
                            if (p.rharpoon(Vec::unit(a), xy) != rhs.build()) return true;
                          }
                          return false;
                        },
                        "module algebra law fails for ->");
                  }));

  r.add(run_check(prefix + "ad_action", "ad is a left action of A*", "ad_{xy} = ad_x ad_y, ad_1 = id",
                  [&]() -> std::optional<Witness> {
                    for (Index y = 0; y < n; ++y)
                      if (p.ad(X.one(), Vec::unit(y)) != Vec::unit(y))
                        return Witness{{y}, {X.alg().label(y)}, "ad_1 y != y"};
                    return first_pair(
                        X.alg(), plan,
                        [&](Index x, Index z) {
                          for (Index y = 0; y < n; ++y)
                            if (p.ad(X.alg().product(x, z), Vec::unit(y)) !=
                                p.ad(Vec::unit(x), p.ad(Vec::unit(z), Vec::unit(y))))
                              return true;
                          return false;
                        },
                        "ad_{xz} != ad_x ad_z");
                  }));

  r.add(run_check(prefix + "ad_module_algebra", "A* is a left A*coop-module algebra under ad",
                  "ad_x(yz) = ad_{x(2)}(y) ad_{x(1)}(z)", [&] {
                    return first_pair(
                        X.alg(), plan,
                        [&](Index y, Index z) {
                          const Vec yz = X.alg().product(y, z);
                          for (Index x = 0; x < n; ++x) {
                            VecBuilder rhs;
                            for (const auto& [k, c] : X.delta_basis(x).terms()) {
                              auto [x1, x2] = split_index(k, n);
                              rhs.add_scaled(X.mul(p.ad(Vec::unit(x2), Vec::unit(y)), p.ad(Vec::unit(x1), Vec::unit(z))),
                                             c);
                            }
                            if (p.ad(Vec::unit(x), yz) != rhs.build()) return true;
                          }
                          return false;
                        },
                        "module algebra law fails for ad");
                  }));
  return r;
}

std::pair<HopfPtr, std::shared_ptr<const DualPairing>> dual_hopf(const HopfPtr& a) {
  const HopfAlgebra& A = *a;
  const std::size_t n = A.dim();
  const LinearMap dt = A.coproduct().transpose();
  std::vector<Vec> table(n * n);
  for (std::size_t k = 0; k < n * n; ++k) table[k] = dt.column(static_cast<Index>(k));
  std::vector<std::string> labels(n);
  for (Index i = 0; i < n; ++i) labels[i] = A.alg().label(i) + "*";
  auto alg = std::make_shared<StructAlgebra>(std::move(table), A.counit().transpose().column(0), labels);

  std::vector<VecBuilder> cop(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, c] : A.alg().product(i, j).terms()) cop[k].add(static_cast<Index>(i * n + j), c);
  std::vector<Vec> coproduct(n), counit(n);
  const Vec unit = A.one();
  for (Index k = 0; k < n; ++k) {
    coproduct[k] = cop[k].build();
    if (!unit[k].is_zero()) counit[k] = Vec::unit(0, unit[k]);
  }
  auto dual = std::make_shared<HopfAlgebra>(alg, LinearMap(n * n, std::move(coproduct)), LinearMap(1, std::move(counit)),
                                            A.antipode().transpose());
  auto pairing = std::make_shared<DualPairing>(a, dual, LinearMap::identity(n));
  return {dual, pairing};
}

}  // namespace hopfoid
