#include "hopfoid/doubles.hpp"

#include <algorithm>

#include "hopfoid/sweep.hpp"

namespace hopfoid {

Vec ModuleAction::act(const Vec& d, const Vec& v) const {
  VecBuilder b;
  for (const auto& [i, ci] : d.terms())
    for (const auto& [j, cj] : v.terms()) b.add_scaled(act_basis(i, j), ci * cj);
  return b.build();
}

LinearMap ModuleAction::matrix(const Vec& d) const {
  return LinearMap::from_function(module_dim(), module_dim(), [&](Index v) { return act(d, Vec::unit(v)); });
}

VerificationReport verify_module_algebra(const ModuleAction& m, const par::SweepPlan& plan,
                                         const std::string& prefix) {
  VerificationReport r;
  const HopfAlgebra& D = *m.acting;
  const Algebra& V = *m.module;
  const std::size_t nd = D.dim(), nv = V.dim();

  r.add(run_check(prefix + "unital", "the unit acts as the identity", "1(v) = v", [&] {
    return sweep(
        nv, {}, [&](Index v) { return m.act(D.one(), Vec::unit(v)) != Vec::unit(v); },
        [&](Index v) { return "1(v) != v at v = " + V.label(v); });
  }));
  r.add(run_check(prefix + "associative", "the action is a left module structure", "(de)(v) = d(e(v))", [&] {
    return sweep_pairs(
        nd, nd, plan,
        [&](Index d, Index e) {
          const Vec de = D.alg().product(d, e);
          for (Index v = 0; v < nv; ++v)
            if (m.act(de, Vec::unit(v)) != m.act(Vec::unit(d), m.act_basis(e, v))) return true;
          return false;
        },
        [&](Index d, Index e) { return "(de)(v) != d(e(v)) at d = " + D.alg().label(d) + ", e = " + D.alg().label(e); });
  }));
  r.add(run_check(prefix + "module_algebra", "the action respects products", "d(uv) = d(1)(u) d(2)(v), d(1) = e(d)1",
                  [&]() -> std::optional<Witness> {
                    for (Index d = 0; d < nd; ++d)
                      if (m.act(Vec::unit(d), V.unit()) != D.eps_basis(d) * V.unit())
                        return Witness{{d}, {D.alg().label(d)}, "d(1) != e(d)1"};
                    return sweep_pairs(
                        nv, nv, plan,
                        [&](Index u, Index v) {
                          const Vec uv = V.mul_basis(u, v);
                          for (Index d = 0; d < nd; ++d) {
                            VecBuilder rhs;
                            for (const auto& [k, c] : D.delta_basis(d).terms()) {
                              auto [d1, d2] = split_index(k, nd);
                              rhs.add_scaled(V.mul(m.act_basis(d1, u), m.act_basis(d2, v)), c);
                            }
                            if (m.act(Vec::unit(d), uv) != rhs.build()) return true;
                          }
                          return false;
                        },
                        [&](Index u, Index v) { return "d(uv) mismatch at u = " + V.label(u) + ", v = " + V.label(v); });
                  }));
  return r;
}

ModuleAction restrict_action(const ModuleAction& m, HopfPtr sub, const LinearMap& embed) {
  const std::size_t nv = m.module_dim();
  ModuleAction out{sub, m.module, {}};
  out.table.resize(sub->dim() * nv);
  for (Index s = 0; s < sub->dim(); ++s)
    for (Index v = 0; v < nv; ++v) out.table[s * nv + v] = m.act(embed.column(s), Vec::unit(v));
  return out;
}

DrinfeldDouble::DrinfeldDouble(std::shared_ptr<const DualPairing> pairing, const par::SweepPlan& plan)
    : pairing_(std::move(pairing)), n_(pairing_->dim()) {
  const DualPairing& P = *pairing_;
  const HopfAlgebra& A = P.A();
  const HopfAlgebra& X = P.Astar();
  const std::size_t n = n_, N = n * n;

  std::vector<std::string> labels(N);
  for (Index x = 0; x < n; ++x)
    for (Index a = 0; a < n; ++a) labels[x * n + a] = X.alg().label(x) + " " + A.alg().label(a);

  auto product = [&](Index i, Index j) {
    auto [x, a] = split_index(i, n);
    auto [y, b] = split_index(j, n);
    VecBuilder out;
    for (const auto& [ka, ca] : A.delta_basis(a).terms()) {
      auto [a1, a2] = split_index(ka, n);
      for (const auto& [ky, cy] : X.delta_basis(y).terms()) {
        auto [y1, y2] = split_index(ky, n);
        const Vec& left = P.coadjoint_left_basis(a1, y2);
        const Vec& right = P.coadjoint_right_basis(a2, y1);
        if (left.is_zero() || right.is_zero()) continue;
        out.add_tensor(X.mul(Vec::unit(x), left), A.mul(right, Vec::unit(b)), n, ca * cy);
      }
    }
    return out.build();
  };
  auto alg = std::make_shared<StructAlgebra>(
      StructAlgebra::from_products(N, product, tensor(X.one(), A.one(), n), std::move(labels), plan));

  std::vector<Vec> cop(N), eps(N);
  for (Index x = 0; x < n; ++x)
    for (Index a = 0; a < n; ++a) {
      VecBuilder b;
      for (const auto& [kx, cx] : X.delta_basis(x).terms()) {
        auto [x1, x2] = split_index(kx, n);
        for (const auto& [ka, ca] : A.delta_basis(a).terms()) {
          auto [a1, a2] = split_index(ka, n);
          b.add(static_cast<Index>((x2 * n + a1) * N + (x1 * n + a2)), cx * ca);
        }
      }
      cop[x * n + a] = b.build();
      const Scalar e = X.eps_basis(x) * A.eps_basis(a);
      if (!e.is_zero()) eps[x * n + a] = Vec::unit(0, e);
    }
  embed_a_ = LinearMap::from_function(N, n, [&](Index a) { return from_A(Vec::unit(a)); });
  embed_x_ = LinearMap::from_function(N, n, [&](Index x) { return from_Astar(Vec::unit(x)); });
  LinearMap anti = LinearMap::from_function(N, N, [&](Index i) {
    auto [x, a] = split_index(i, n);
    return alg->mul(from_A(A.antipode().column(a)), from_Astar(X.antipode_inverse().column(x)));
  });
  hopf_ = std::make_shared<HopfAlgebra>(alg, LinearMap(N * N, std::move(cop)), LinearMap(1, std::move(eps)),
                                        std::move(anti));

  VecBuilder r, r21;
  for (Index t = 0; t < n; ++t) {
    const Vec at = from_A(Vec::unit(t));
    const Vec xt = from_Astar(P.dual_basis(t));
    r.add_tensor(at, xt, N);
    r21.add_tensor(xt, at, N);
  }
  r_ = r.build();
  r21_ = r21.build();
}

std::optional<Witness> exchange_witness(const DrinfeldDouble& d, const par::SweepPlan& plan) {
  const DualPairing& P = d.pairing();
  const HopfAlgebra& A = P.A();
  const HopfAlgebra& X = P.Astar();
  const HopfAlgebra& D = d.hopf();
  const std::size_t n = d.base_dim();
  return sweep_pairs(
      n, n, plan,
      [&](Index x, Index a) {
        VecBuilder lhs, rhs;
        for (const auto& [kx, cx] : X.delta_basis(x).terms()) {
          auto [x1, x2] = split_index(kx, n);
          for (const auto& [ka, ca] : A.delta_basis(a).terms()) {
            auto [a1, a2] = split_index(ka, n);
            const Scalar c = cx * ca;
            const Scalar l = P.pair_basis(x2, a1);
            if (!l.is_zero()) lhs.add(static_cast<Index>(x1 * n + a2), c * l);
            const Scalar rr = P.pair_basis(x1, a2);
            if (!rr.is_zero())
              rhs.add_scaled(D.mul(d.from_A(Vec::unit(a1)), d.from_Astar(Vec::unit(x2))), c * rr);
          }
        }
        return lhs.build() != rhs.build();
      },
      [&](Index x, Index a) {
        return "exchange identity fails at x = " + X.alg().label(x) + ", a = " + A.alg().label(a);
      });
}

VerificationReport verify_double(const DrinfeldDouble& d, const par::SweepPlan& plan, const std::string& prefix) {
  VerificationReport r = verify_hopf(d.hopf(), plan, prefix + "hopf.");
  const DualPairing& P = d.pairing();
  const HopfAlgebra& A = P.A();
  const HopfAlgebra& X = P.Astar();
  const HopfAlgebra& D = d.hopf();
  const std::size_t n = d.base_dim(), N = d.dim();

  r.add(run_check(prefix + "embed_A", "a -> 1 (x) a is a Hopf algebra map", "i(ab) = i(a)i(b), D i = (i (x) i) D, e i = e, S i = i S",
                  [&]() -> std::optional<Witness> {
                    if (auto w = morphism_witness({A.alg_ptr(), D.alg_ptr(), d.embed_A(), false}, plan)) return w;
                    return sweep(
                        n, {},
                        [&](Index a) {
                          VecBuilder img;
                          for (const auto& [k, c] : A.delta_basis(a).terms()) {
                            auto [a1, a2] = split_index(k, n);
                            img.add_tensor(d.embed_A().column(a1), d.embed_A().column(a2), N, c);
                          }
                          const Vec ia = d.embed_A().column(a);
                          return D.delta(ia) != img.build() || D.eps(ia) != A.eps_basis(a) ||
                                 D.S(ia) != d.embed_A().apply(A.antipode().column(a));
                        },
                        [&](Index a) { return "coalgebra or antipode mismatch at " + A.alg().label(a); });
                  }));

  r.add(run_check(prefix + "embed_Astar", "x -> x (x) 1 is a Hopf algebra map from A*coop",
                  "j(xy) = j(x)j(y), D j(x) = j(x(2)) (x) j(x(1)), S j = j S^-1", [&]() -> std::optional<Witness> {
                    if (auto w = morphism_witness({X.alg_ptr(), D.alg_ptr(), d.embed_Astar(), false}, plan)) return w;
                    return sweep(
                        n, {},
                        [&](Index x) {
                          VecBuilder img;
                          for (const auto& [k, c] : X.delta_basis(x).terms()) {
                            auto [x1, x2] = split_index(k, n);
                            img.add_tensor(d.embed_Astar().column(x2), d.embed_Astar().column(x1), N, c);
                          }
                          const Vec jx = d.embed_Astar().column(x);
                          return D.delta(jx) != img.build() || D.eps(jx) != X.eps_basis(x) ||
                                 D.S(jx) != d.embed_Astar().apply(X.antipode_inverse().column(x));
                        },
                        [&](Index x) { return "coalgebra or antipode mismatch at " + X.alg().label(x); });
                  }));

  r.add(run_check(prefix + "antipode_formula", "antipode of the double on basis elements", "S(x (x) a) = S(a) S^-1(x)", [&] {
    return sweep(
        N, {},
        [&](Index i) {
          auto [x, a] = split_index(i, n);
          return D.antipode().column(i) !=
                 D.mul(d.from_A(A.antipode().column(a)), d.from_Astar(X.antipode_inverse().column(x)));
        },
        [&](Index i) { return "S formula fails at " + D.alg().label(i); });
  }));

  r.add(run_check(prefix + "factorization", "x (x) a is the product of its factors", "(x (x) 1)(1 (x) a) = x (x) a", [&] {
    return sweep(
        N, {},
        [&](Index i) {
          auto [x, a] = split_index(i, n);
          return D.mul(d.from_Astar(Vec::unit(x)), d.from_A(Vec::unit(a))) != Vec::unit(i);
        },
        [&](Index i) { return "factorization fails at " + D.alg().label(i); });
  }));

  r.add(run_check(prefix + "exchange", "exchange identity read with x(1) for b(1)",
                  "x(1) a(2) <a(1), x(2)> = a(1) x(2) <a(2), x(1)>", [&] { return exchange_witness(d, plan); }));
  return r;
}

ModuleAction dual_module_action(const DoublePtr& d) {
  const DualPairing& P = d->pairing();
  const std::size_t n = d->base_dim();
  ModuleAction m{d->hopf_ptr(), P.Astar().alg_ptr(), {}};
  m.table = par::map<Vec>(n * n * n, [&](std::size_t k) {
    const Index xa = static_cast<Index>(k / n), y = static_cast<Index>(k % n);
    auto [x, a] = split_index(xa, n);
    return P.ad(Vec::unit(x), P.rharpoon_basis(a, y));
  });
  return m;
}

std::optional<Witness> r_condition_witness(const ModuleAction& action, const Vec& r) {
  const Algebra& V = *action.module;
  const std::size_t nv = V.dim(), N = action.acting->dim();
  return sweep_pairs(
      nv, nv, {},
      [&](Index u, Index v) {
        VecBuilder lhs;
        for (const auto& [k, c] : r.terms()) {
          auto [r1, r2] = split_index(k, N);
          lhs.add_scaled(V.mul(action.act_basis(r2, v), action.act_basis(r1, u)), c);
        }
        return lhs.build() != V.mul_basis(u, v);
      },
      [&](Index u, Index v) { return "m_op R != m at u = " + V.label(u) + ", v = " + V.label(v); });
}

std::optional<Witness> r21r_witness(const DrinfeldDouble& d, const ModuleAction& action) {
  const Algebra& V = *action.module;
  const std::size_t nv = V.dim(), N = d.dim();
  const Vec rr = d.hopf().square().mul(d.R21(), d.R());
  return sweep_pairs(
      nv, nv, {},
      [&](Index u, Index v) {
        VecBuilder lhs;
        for (const auto& [k, c] : rr.terms()) {
          auto [r1, r2] = split_index(k, N);
          lhs.add_scaled(V.mul(action.act_basis(r1, u), action.act_basis(r2, v)), c);
        }
        return lhs.build() != V.mul_basis(u, v);
      },
      [&](Index u, Index v) { return "m (R21 R) != m at u = " + V.label(u) + ", v = " + V.label(v); });
}

SpecialElement d0_build(const DrinfeldDouble& d) {
  const DualPairing& P = d.pairing();
  const HopfAlgebra& A = P.A();
  const HopfAlgebra& D = d.hopf();
  VecBuilder v, w;
  for (Index t = 0; t < d.base_dim(); ++t) {
    const Vec xt = d.from_Astar(P.dual_basis(t));
    v.add(D.mul(d.from_A(A.S(A.antipode().column(t))), xt));
    w.add(D.mul(d.from_A(A.antipode_inverse().column(t)), xt));
  }
  return {v.build(), w.build()};
}

std::optional<Witness> d0_coproduct_witness(const DrinfeldDouble& d, const SpecialElement& s,
                                            const par::SweepPlan& plan) {
  const HopfAlgebra& D = d.hopf();
  const DualPairing& P = d.pairing();
  const std::size_t n = d.base_dim(), N = d.dim();

  VecBuilder r;
  for (Index t = 0; t < n; ++t) r.add_tensor(d.from_A(Vec::unit(t)), d.from_Astar(P.dual_basis(t)), N);
  if (r.build() != d.R()) return Witness{{}, {}, "R is not sum_t (1 (x) a_t) (x) (x_t (x) 1)"};

  // R21 R = sum_{x,t} (x (x) a_t) (x) b_x x_t with b_x = sum_s <x_s coefficient of x> a_s
  std::vector<VecBuilder> bx(n);
  for (Index t = 0; t < n; ++t)
    for (const auto& [x, c] : P.dual_basis(t).terms()) bx[x].add(t, c);
  std::vector<Vec> b;
  for (auto& v : bx) b.push_back(v.build());

  const std::vector<Vec> right =
      par::map<Vec>(N, [&](std::size_t i) { return D.mul(Vec::unit(static_cast<Index>(i)), s.d0); });
  const std::vector<Vec> second = par::map<Vec>(N, [&](std::size_t i) {
    auto [x, t] = split_index(static_cast<Index>(i), n);
    const Vec y = D.mul(d.from_A(b[x]), d.from_Astar(P.dual_basis(t)));
    VecBuilder q;
    for (const auto& [k, c] : y.terms()) q.add_scaled(right[k], c);
    return q.build();
  });
  // rows of the first factor: slice h collects coefficient h of every right[i]
  std::vector<std::vector<std::pair<Index, Scalar>>> first(N);
  for (Index i = 0; i < N; ++i)
    for (const auto& [h, c] : right[i].terms()) first[h].emplace_back(i, c);

  const Vec lhs = D.delta(s.d0);
  const auto& terms = lhs.terms();
  std::vector<std::size_t> begin(N + 1);
  for (std::size_t h = 0; h <= N; ++h)
    begin[h] = static_cast<std::size_t>(
        std::lower_bound(terms.begin(), terms.end(), h * N, [](const Vec::Term& t, std::size_t k) { return t.first < k; }) -
        terms.begin());

  return sweep(
      N, plan,
      [&](Index h) {
        VecBuilder want;
        for (const auto& [i, c] : first[h]) want.add_scaled(second[i], c);
        VecBuilder got;
        for (std::size_t k = begin[h]; k < begin[h + 1]; ++k) got.add(static_cast<Index>(terms[k].first % N), terms[k].second);
        return got.build() != want.build();
      },
      [&](Index h) { return "D d0 and (R21 R)(d0 (x) d0) differ in the slice " + D.alg().label(h) + " (x) -"; });
}

VerificationReport verify_d0(const DrinfeldDouble& d, const SpecialElement& s, const ModuleAction* action,
                             const par::SweepPlan& plan, const std::string& prefix) {
  VerificationReport r;
  const HopfAlgebra& D = d.hopf();
  const std::size_t N = d.dim();

  r.add(run_check(prefix + "inverse", "S^-1(a_t) x_t inverts d0", "d0 d0^-1 = d0^-1 d0 = 1",
                  [&]() -> std::optional<Witness> {
                    if (D.mul(s.d0, s.d0_inv) != D.one() || D.mul(s.d0_inv, s.d0) != D.one())
                      return Witness{{}, {}, "d0 d0^-1 != 1"};
                    return std::nullopt;
                  }));
  r.add(run_check(prefix + "s_squared", "S^2 is conjugation by d0", "S^2(h) = d0 h d0^-1", [&] {
    return sweep(
        N, plan,
        [&](Index i) {
          return D.S(D.antipode().column(i)) != D.mul(D.mul(s.d0, Vec::unit(i)), s.d0_inv);
        },
        [&](Index i) { return "S^2(h) != d0 h d0^-1 at h = " + D.alg().label(i); });
  }));
  r.add(run_check(prefix + "coproduct", "coproduct of d0", "D d0 = (R21 R)(d0 (x) d0)",
                  [&] { return d0_coproduct_witness(d, s, plan); }));
  if (action) {
    r.add(run_check(prefix + "automorphism", "d0 acts as an algebra automorphism", "d0(uv) = d0(u) d0(v), d0 bijective",
                    [&]() -> std::optional<Witness> {
                      const Algebra& V = *action->module;
                      const LinearMap m = action->matrix(s.d0);
                      if (rank(m) != V.dim()) return Witness{{}, {}, "d0 does not act bijectively"};
                      return morphism_witness({action->module, action->module, m, false}, plan);
                    }));
  }
  return r;
}

SmashProduct::SmashProduct(AlgebraPtr v, HopfPtr a, std::vector<Vec> action, const par::SweepPlan& plan)
    : v_(std::move(v)), a_(std::move(a)), action_(std::move(action)) {
  const std::size_t nv = v_->dim(), na = a_->dim();
  if (action_.size() != nv * na) throw std::invalid_argument("action table has wrong size");
  std::vector<std::string> labels(nv * na);
  for (Index i = 0; i < nv; ++i)
    for (Index j = 0; j < na; ++j) labels[i * na + j] = v_->label(i) + " # " + a_->alg().label(j);
  auto product = [&](Index i, Index j) {
    auto [v, a] = split_index(i, na);
    auto [u, b] = split_index(j, na);
    VecBuilder out;
    for (const auto& [k, c] : a_->delta_basis(a).terms()) {
      auto [a1, a2] = split_index(k, na);
      const Vec& au = act_basis(a1, u);
      if (au.is_zero()) continue;
      out.add_tensor(v_->mul(Vec::unit(v), au), a_->alg().product(a2, b), na, c);
    }
    return out.build();
  };
  alg_ = std::make_shared<StructAlgebra>(
      StructAlgebra::from_products(nv * na, product, tensor(v_->unit(), a_->one(), na), std::move(labels), plan));
}

Vec SmashProduct::act(const Vec& a, const Vec& v) const {
  VecBuilder b;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : v.terms()) b.add_scaled(act_basis(i, j), ci * cj);
  return b.build();
}

LinearMap SmashProduct::t1() const {
  const std::size_t nv = v_dim(), na = a_dim();
  return LinearMap::from_function(nv * nv, dim(), [&](Index h) {
    auto [v, a] = split_index(h, na);
    VecBuilder b;
    for (Index j = 0; j < nv; ++j)
      for (const auto& [i, c] : v_->mul(Vec::unit(v), act_basis(a, j)).terms())
        b.add(static_cast<Index>(i * nv + j), c);
    return b.build();
  });
}

SmashPtr heisenberg_double(const DualPairing& p, const par::SweepPlan& plan) {
  const std::size_t n = p.dim();
  std::vector<Vec> action(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index x = 0; x < n; ++x) action[a * n + x] = p.rharpoon_basis(a, x);
  return std::make_shared<SmashProduct>(p.Astar().alg_ptr(), p.A_ptr(), std::move(action), plan);
}

VerificationReport verify_smash(const SmashProduct& h, const par::SweepPlan& plan, const std::string& prefix) {
  VerificationReport r;
  const std::size_t nv = h.v_dim(), na = h.a_dim();
  auto hp = h.alg_ptr();
  r.add(run_check(prefix + "embed_V", "v -> v # 1 is an algebra map", "(uv) # 1 = (u # 1)(v # 1)", [&] {
    LinearMap m = LinearMap::from_function(h.dim(), nv, [&](Index v) { return h.from_V(Vec::unit(v)); });
    return morphism_witness({h.V_ptr(), hp, m, false}, plan);
  }));
  r.add(run_check(prefix + "embed_A", "a -> 1 # a is an algebra map", "1 # ab = (1 # a)(1 # b)", [&] {
    LinearMap m = LinearMap::from_function(h.dim(), na, [&](Index a) { return h.from_A(Vec::unit(a)); });
    return morphism_witness({h.A().alg_ptr(), hp, m, false}, plan);
  }));
  r.add(run_check(prefix + "product_law", "smash product rule on generators",
                  "(v # 1)(1 # a) = v # a, (1 # a)(u # 1) = a(1)(u) # a(2)", [&] {
                    return sweep_pairs(
                        nv, na, {},
                        [&](Index v, Index a) {
                          if (h.alg().mul(h.from_V(Vec::unit(v)), h.from_A(Vec::unit(a))) !=
                              Vec::unit(static_cast<Index>(v * na + a)))
                            return true;
                          VecBuilder rhs;
                          for (const auto& [k, c] : h.A().delta_basis(a).terms()) {
                            auto [a1, a2] = split_index(k, na);
                            rhs.add_tensor(h.act_basis(a1, v), Vec::unit(a2), na, c);
                          }
                          return h.alg().mul(h.from_A(Vec::unit(a)), h.from_V(Vec::unit(v))) != rhs.build();
                        },
                        [&](Index v, Index a) {
                          return "product rule fails at v = " + h.V().label(v) + ", a = " + h.A().alg().label(a);
                        });
                  }));
  r.add(run_check(prefix + "t1_representation", "T1(v # a)(u) = v a(u) is a representation", "T1(hk) = T1(h) T1(k)", [&] {
    auto end = std::make_shared<StructAlgebra>(StructAlgebra::matrix_algebra(nv));
    return morphism_witness({hp, end, h.t1(), false}, plan);
  }));
  return r;
}

Vec heisenberg_preimage(const SmashProduct& h, const DualPairing& p, const Vec& phi) {
  const std::size_t n = p.dim();
  const HopfAlgebra& A = p.A();
  const HopfAlgebra& X = p.Astar();
  VecBuilder out;
  for (Index s = 0; s < n; ++s) {
    // phi(x_s), with phi given on matrix units
    VecBuilder ys;
    for (const auto& [k, c] : phi.terms()) {
      auto [i, j] = split_index(k, n);
      const Scalar xs = p.dual_basis(s)[j];
      if (!xs.is_zero()) ys.add(i, c * xs);
    }
    const Vec y = ys.build();
    if (y.is_zero()) continue;
    for (Index t = 0; t < n; ++t)
      out.add_tensor(X.mul(y, p.dual_basis(t)), A.mul(A.antipode_inverse().column(t), Vec::unit(s)), h.a_dim());
  }
  return out.build();
}

VerificationReport verify_t1_isomorphism(const SmashProduct& h, const DualPairing& p, const par::SweepPlan& plan,
                                         const std::string& prefix) {
  VerificationReport r;
  const LinearMap t1 = h.t1();
  const std::size_t nv = h.v_dim();
  auto end = std::make_shared<StructAlgebra>(StructAlgebra::matrix_algebra(nv));
  r.add(run_check(prefix + "homomorphism", "T1 is an algebra map into End(A*)", "T1(hk) = T1(h) T1(k)",
                  [&] { return morphism_witness({h.alg_ptr(), end, t1, false}, plan); }));
  r.add(run_check(prefix + "bijective", "T1 has full rank", "rank T1 = dim H = dim End(A*)",
                  [&]() -> std::optional<Witness> {
                    const std::size_t rk = rank(t1);
                    if (rk == h.dim() && rk == nv * nv) return std::nullopt;
                    return Witness{{}, {}, "rank " + std::to_string(rk) + " of " + std::to_string(h.dim())};
                  }));
  r.add(run_check(prefix + "inverse_formula", "explicit preimage on every matrix unit",
                  "T1(phi(x_s) x_t # S^-1(a_t) a_s) = phi", [&] {
                    return sweep(
                        nv * nv, plan,
                        [&](Index u) {
                          const Vec phi = Vec::unit(u);
                          return t1.apply(heisenberg_preimage(h, p, phi)) != phi;
                        },
                        [&](Index u) { return "preimage formula fails at matrix unit " + end->label(u); });
                  }));
  return r;
}

LinearMap double_to_heisenberg(const DrinfeldDouble& d, const SmashProduct& h) {
  const DualPairing& P = d.pairing();
  const HopfAlgebra& A = P.A();
  const HopfAlgebra& X = P.Astar();
  const std::size_t n = d.base_dim();
  return LinearMap::from_function(h.dim(), d.dim(), [&](Index i) {
    auto [x, a] = split_index(i, n);
    VecBuilder out;
    for (Index t = 0; t < n; ++t) {
      // x(2) (a -> x_t) S^-1(x(1))
      VecBuilder wb;
      const Vec axt = P.rharpoon(Vec::unit(a), P.dual_basis(t));
      for (const auto& [k, c] : X.delta_basis(x).terms()) {
        auto [x1, x2] = split_index(k, n);
        wb.add_scaled(X.mul(X.mul(Vec::unit(x2), axt), X.antipode_inverse().column(x1)), c);
      }
      const Vec w = wb.build();
      if (w.is_zero()) continue;
      for (Index s = 0; s < n; ++s)
        out.add_tensor(X.mul(w, P.dual_basis(s)), A.mul(A.antipode_inverse().column(s), Vec::unit(t)), n);
    }
    return out.build();
  });
}

VerificationReport verify_double_to_heisenberg(const DrinfeldDouble& d, const SmashProduct& h,
                                               const ModuleAction& action, const par::SweepPlan& plan,
                                               const std::string& prefix) {
  VerificationReport r;
  const LinearMap f = double_to_heisenberg(d, h);
  r.add(run_check(prefix + "homomorphism", "the map D(A) -> H(A*) is an algebra map", "f(gh) = f(g) f(h), f(1) = 1",
                  [&] { return morphism_witness({d.hopf().alg_ptr(), h.alg_ptr(), f, false}, plan); }));
  r.add(run_check(prefix + "t1_composite", "T1 after the map is the action of D(A) on A*", "T1(f(g)) = (y -> g(y))", [&] {
    const LinearMap t1 = h.t1();
    return sweep(
        d.dim(), {},
        [&](Index g) { return t1.apply(f.column(g)) != as_matrix_units(action.matrix(Vec::unit(g))); },
        [&](Index g) { return "T1 f(g) differs from the action at g = " + d.hopf().alg().label(g); });
  }));
  return r;
}

}  // namespace hopfoid
