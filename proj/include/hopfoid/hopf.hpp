#pragma once

#include <memory>
#include <vector>

#include "hopfoid/algebra.hpp"

namespace hopfoid {

/// Finite-dimensional Hopf algebra.  The coproduct is a map H -> H (x) H
/// (dim^2 rows), the counit a 1-row map, and S^{-1} is computed by matrix
/// inversion.
class HopfAlgebra {
 public:
  /// Throws std::invalid_argument if the shapes are wrong or S is singular.
  HopfAlgebra(std::shared_ptr<const StructAlgebra> alg, LinearMap coproduct, LinearMap counit, LinearMap antipode);

  /// Generator data for building a Hopf structure on a monomial basis.
  struct Generator {
    Vec element;
    Vec coproduct;
    Scalar counit;
    Vec antipode;
  };
  /// Each basis element i is the ordered product of generators words[i];
  /// the maps are extended multiplicatively (S anti-multiplicatively).
  /// Throws if some word does not multiply out to its basis element.
  static HopfAlgebra from_generators(std::shared_ptr<const StructAlgebra> alg,
                                     const std::vector<std::vector<std::size_t>>& words,
                                     const std::vector<Generator>& gens);

  const StructAlgebra& alg() const noexcept { return *alg_; }
  const std::shared_ptr<const StructAlgebra>& alg_ptr() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return alg_->dim(); }
  /// H (x) H with the componentwise product.
  const TensorAlgebra& square() const noexcept { return *square_; }

  const LinearMap& coproduct() const noexcept { return coproduct_; }
  const LinearMap& counit() const noexcept { return counit_; }
  const LinearMap& antipode() const noexcept { return antipode_; }
  const LinearMap& antipode_inverse() const noexcept { return antipode_inv_; }

  Vec mul(const Vec& x, const Vec& y) const { return alg_->mul(x, y); }
  Vec delta(const Vec& x) const { return coproduct_.apply(x); }
  const Vec& delta_basis(Index i) const { return coproduct_.column(i); }
  Scalar eps(const Vec& x) const;
  Scalar eps_basis(Index i) const { return counit_.column(i)[0]; }
  Vec S(const Vec& x) const { return antipode_.apply(x); }
  Vec S_inv(const Vec& x) const { return antipode_inv_.apply(x); }
  Vec one() const { return alg_->unit(); }
  std::string format(const Vec& v) const { return alg_->format(v); }

 private:
  std::shared_ptr<const StructAlgebra> alg_;
  std::shared_ptr<const TensorAlgebra> square_;
  LinearMap coproduct_;
  LinearMap counit_;
  LinearMap antipode_;
  LinearMap antipode_inv_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Every Hopf axiom over all basis elements, pairs and triples in `plan`.
VerificationReport verify_hopf(const HopfAlgebra& h, const par::SweepPlan& plan = {}, const std::string& prefix = "");

/// Nondegenerate Hopf pairing <x, a> between A* and A, with
/// <xy, a> = <x (x) y, Delta a> and <x, ab> = <Delta x, a (x) b>.
///
/// Holds the dual bases {a_t}, {x_t} and tabulates the actions
///   a -> x = x(1) <x(2), a>      x <- a = x(2) <a, x(1)>
///   x -> a = a(1) <a(2), x>      a <- x = a(2) <x, a(1)>
/// and the co-adjoint actions built from them.
class DualPairing {
 public:
  /// `matrix` has rows indexed by the basis of A*, columns by the basis of A.
  DualPairing(HopfPtr a, HopfPtr astar, LinearMap matrix);

  const HopfAlgebra& A() const noexcept { return *a_; }
  const HopfAlgebra& Astar() const noexcept { return *astar_; }
  const HopfPtr& A_ptr() const noexcept { return a_; }
  const HopfPtr& Astar_ptr() const noexcept { return astar_; }
  std::size_t dim() const noexcept { return a_->dim(); }

  const Scalar& pair_basis(Index x, Index a) const { return p_[static_cast<std::size_t>(x) * n_ + a]; }
  Scalar pair(const Vec& x, const Vec& a) const;
  /// x_t in the basis of A*, so <x_t, a_s> = delta_ts.
  const Vec& dual_basis(Index t) const { return dual_[t]; }

  Vec rharpoon(const Vec& a, const Vec& x) const;           // a -> x, in A*
  Vec lharpoon(const Vec& x, const Vec& a) const;           // x <- a, in A*
  Vec rharpoon_on_A(const Vec& x, const Vec& a) const;      // x -> a, in A
  Vec lharpoon_on_A(const Vec& a, const Vec& x) const;      // a <- x, in A
  /// a |> x = a(1) -> x <- S^{-1}(a(2))
  Vec coadjoint_left(const Vec& a, const Vec& x) const;
  /// a <| x = S^{-1}(x(1)) -> a <- x(2)
  Vec coadjoint_right(const Vec& a, const Vec& x) const;
  /// ad_x y = x(2) y S^{-1}(x(1)), in A*
  Vec ad(const Vec& x, const Vec& y) const;

  const Vec& coadjoint_left_basis(Index a, Index x) const { return cl_[static_cast<std::size_t>(a) * n_ + x]; }
  const Vec& coadjoint_right_basis(Index a, Index x) const { return cr_[static_cast<std::size_t>(a) * n_ + x]; }
  const Vec& rharpoon_basis(Index a, Index x) const { return rh_[static_cast<std::size_t>(a) * n_ + x]; }

 private:
  template <class Table>
  Vec bilinear(const Table& table, const Vec& u, const Vec& v) const;

  HopfPtr a_;
  HopfPtr astar_;
  std::size_t n_;
  std::vector<Scalar> p_;
  std::vector<Vec> dual_;
  std::vector<Vec> rh_, lh_, xa_, ax_, cl_, cr_, ad_;
};

/// Dual-pair identities, nondegeneracy, and the module-algebra laws for
/// -> and ad.
VerificationReport verify_pairing(const DualPairing& p, const par::SweepPlan& plan = {}, const std::string& prefix = "");

/// A* on the dual basis of A, with the identity pairing.
std::pair<HopfPtr, std::shared_ptr<const DualPairing>> dual_hopf(const HopfPtr& a);

}  // namespace hopfoid
