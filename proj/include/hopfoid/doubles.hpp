#pragma once

#include <memory>
#include <vector>

#include "hopfoid/hopf.hpp"

namespace hopfoid {

/// Left action of a Hopf algebra on an algebra, tabulated on basis pairs.
struct ModuleAction {
  HopfPtr acting;
  AlgebraPtr module;
  /// d(v) for acting basis d and module basis v, at d * dim V + v.
  std::vector<Vec> table;

  std::size_t module_dim() const { return module->dim(); }
  const Vec& act_basis(Index d, Index v) const { return table[static_cast<std::size_t>(d) * module->dim() + v]; }
  Vec act(const Vec& d, const Vec& v) const;
  /// Matrix of v -> d(v).
  LinearMap matrix(const Vec& d) const;
};

/// Unital, associative, and d(uv) = d(1)(u) d(2)(v), d(1) = e(d) 1.
VerificationReport verify_module_algebra(const ModuleAction& m, const par::SweepPlan& plan = {},
                                         const std::string& prefix = "");

/// The action pulled back along a Hopf map `embed`: sub -> acting.
ModuleAction restrict_action(const ModuleAction& m, HopfPtr sub, const LinearMap& embed);

/// D(A) on A* (x) A, basis index x * n + a for x (x) a.
///   (x (x) a)(y (x) b) = x (a(1) |> y(2)) (x) (a(2) <| y(1)) b
///   D(x (x) a) = (x(2) (x) a(1)) (x) (x(1) (x) a(2))
///   S(x (x) a) = (1 (x) S a)(S^-1 x (x) 1)
class DrinfeldDouble {
 public:
  explicit DrinfeldDouble(std::shared_ptr<const DualPairing> pairing, const par::SweepPlan& plan = {});

  const DualPairing& pairing() const noexcept { return *pairing_; }
  const std::shared_ptr<const DualPairing>& pairing_ptr() const noexcept { return pairing_; }
  const HopfAlgebra& hopf() const noexcept { return *hopf_; }
  const HopfPtr& hopf_ptr() const noexcept { return hopf_; }
  std::size_t base_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return n_ * n_; }

  Vec element(const Vec& x, const Vec& a) const { return tensor(x, a, n_); }
  Vec from_A(const Vec& a) const { return element(pairing_->Astar().one(), a); }
  Vec from_Astar(const Vec& x) const { return element(x, pairing_->A().one()); }
  const LinearMap& embed_A() const noexcept { return embed_a_; }
  const LinearMap& embed_Astar() const noexcept { return embed_x_; }

  /// R = sum_t (1 (x) a_t) (x) (x_t (x) 1) in D (x) D, and its flip.
  const Vec& R() const noexcept { return r_; }
  const Vec& R21() const noexcept { return r21_; }

 private:
  std::shared_ptr<const DualPairing> pairing_;
  std::size_t n_;
  HopfPtr hopf_;
  LinearMap embed_a_, embed_x_;
  Vec r_, r21_;
};

using DoublePtr = std::shared_ptr<const DrinfeldDouble>;

/// Hopf axioms of D(A), the two embeddings as Hopf maps, the antipode
/// formula and the exchange identity x(1) a(2) <a(1), x(2)> = a(1) x(2) <a(2), x(1)>.
VerificationReport verify_double(const DrinfeldDouble& d, const par::SweepPlan& plan = {},
                                 const std::string& prefix = "");

/// First pair (x, a) where x(1) a(2) <a(1), x(2)> != a(1) x(2) <a(2), x(1)>.
std::optional<Witness> exchange_witness(const DrinfeldDouble& d, const par::SweepPlan& plan = {});

/// D(A) on A*: (x (x) a) . y = ad_x(a -> y).
ModuleAction dual_module_action(const DoublePtr& d);

/// First pair (u, v) with m_op(R (u (x) v)) != uv.
std::optional<Witness> r_condition_witness(const ModuleAction& action, const Vec& r);
/// First pair (u, v) with m((R21 R)(u (x) v)) != uv.
std::optional<Witness> r21r_witness(const DrinfeldDouble& d, const ModuleAction& action);

struct SpecialElement {
  Vec d0;      // S^2(a_t) x_t
  Vec d0_inv;  // S^-1(a_t) x_t
};

SpecialElement d0_build(const DrinfeldDouble& d);
/// D d0 = (R21 R)(d0 (x) d0), compared one slice h (x) D at a time for the
/// first-factor basis elements h selected by `plan`.
std::optional<Witness> d0_coproduct_witness(const DrinfeldDouble& d, const SpecialElement& s,
                                            const par::SweepPlan& plan = {});

/// Inverse, S_D^2 = d0 (.) d0^-1, D d0 = (R21 R)(d0 (x) d0), and d0 acting
/// as an algebra automorphism of V when an action is given.
VerificationReport verify_d0(const DrinfeldDouble& d, const SpecialElement& s, const ModuleAction* action,
                             const par::SweepPlan& plan = {}, const std::string& prefix = "");

/// V # A on V (x) A, basis index v * dim A + a.
///   (v # a)(u # b) = v a(1)(u) # a(2) b
class SmashProduct {
 public:
  /// `action[a * dim V + v]` is a(v).
  SmashProduct(AlgebraPtr v, HopfPtr a, std::vector<Vec> action, const par::SweepPlan& plan = {});

  const Algebra& V() const noexcept { return *v_; }
  const AlgebraPtr& V_ptr() const noexcept { return v_; }
  const HopfAlgebra& A() const noexcept { return *a_; }
  const HopfPtr& A_ptr() const noexcept { return a_; }
  const StructAlgebra& alg() const noexcept { return *alg_; }
  const std::shared_ptr<const StructAlgebra>& alg_ptr() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return alg_->dim(); }
  std::size_t v_dim() const noexcept { return v_->dim(); }
  std::size_t a_dim() const noexcept { return a_->dim(); }

  Vec element(const Vec& v, const Vec& a) const { return tensor(v, a, a_->dim()); }
  Vec from_V(const Vec& v) const { return element(v, a_->one()); }
  Vec from_A(const Vec& a) const { return element(v_->unit(), a); }
  Vec act(const Vec& a, const Vec& v) const;
  const Vec& act_basis(Index a, Index v) const { return action_[static_cast<std::size_t>(a) * v_->dim() + v]; }

  /// T1(v # a)(u) = v a(u) into End(V) on matrix units.
  LinearMap t1() const;

 private:
  AlgebraPtr v_;
  HopfPtr a_;
  std::vector<Vec> action_;
  std::shared_ptr<const StructAlgebra> alg_;
};

using SmashPtr = std::shared_ptr<const SmashProduct>;

/// H(A*) = A* # A under a -> x.
SmashPtr heisenberg_double(const DualPairing& p, const par::SweepPlan& plan = {});

/// Embeddings of V and A are algebra maps and T1 is a representation.
VerificationReport verify_smash(const SmashProduct& h, const par::SweepPlan& plan = {}, const std::string& prefix = "");

/// Preimage of phi in End(A*) under T1 of H(A*):
/// phi(x_s) x_t # S^-1(a_t) a_s.
Vec heisenberg_preimage(const SmashProduct& h, const DualPairing& p, const Vec& phi);

/// T1 of H(A*) is an algebra isomorphism onto End(A*), with the explicit
/// preimage formula checked on every matrix unit.
VerificationReport verify_t1_isomorphism(const SmashProduct& h, const DualPairing& p, const par::SweepPlan& plan = {},
                                         const std::string& prefix = "");

/// x (x) a -> x(2) (a -> x_t) S^-1(x(1)) x_s # S^-1(a_s) a_t.
LinearMap double_to_heisenberg(const DrinfeldDouble& d, const SmashProduct& h);
VerificationReport verify_double_to_heisenberg(const DrinfeldDouble& d, const SmashProduct& h,
                                               const ModuleAction& action, const par::SweepPlan& plan = {},
                                               const std::string& prefix = "");

}  // namespace hopfoid
