#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfoid/linalg.hpp"
#include "hopfoid/parallel.hpp"
#include "hopfoid/report.hpp"

namespace hopfoid {

/// Associative unital algebra with a fixed basis.  Implementations only
/// supply basis products; everything else is derived.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual std::size_t dim() const = 0;
  virtual Vec unit() const = 0;
  virtual std::string label(Index i) const = 0;
  /// out += c * (e_i e_j)
  virtual void mul_basis_into(Index i, Index j, const Scalar& c, VecBuilder& out) const = 0;

  Vec mul_basis(Index i, Index j) const;
  Vec mul(const Vec& x, const Vec& y) const;
  /// Matrix of y -> x y.
  LinearMap left_mult_matrix(const Vec& x) const;
  LinearMap right_mult_matrix(const Vec& x) const;
  std::string format(const Vec& v) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Thrown when structure constants fail associativity or the unit laws.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(const std::string& what, std::vector<Index> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Index>& witness() const noexcept { return witness_; }

 private:
  std::vector<Index> witness_;
};

/// Algebra stored as a dense table of basis products, entry i * n + j.
class StructAlgebra final : public Algebra {
 public:
  /// Validates associativity and the unit laws over the triples selected by
  /// `plan`; throws AlgebraError naming the first failing triple or pair.
  StructAlgebra(std::vector<Vec> table, Vec unit, std::vector<std::string> labels = {},
                const par::SweepPlan& plan = {});

  static StructAlgebra from_products(std::size_t n, const std::function<Vec(Index, Index)>& product, Vec unit,
                                     std::vector<std::string> labels = {}, const par::SweepPlan& plan = {});
  /// Tabulates any algebra (including the lazy views below).
  static StructAlgebra materialize(const Algebra& a, const par::SweepPlan& plan = {});
  /// Matrix algebra M_n(k) on the units E_ij (index i * n + j), E_ij E_kl = delta_jk E_il.
  static StructAlgebra matrix_algebra(std::size_t n);

  std::size_t dim() const override { return n_; }
  Vec unit() const override { return unit_; }
  std::string label(Index i) const override;
  void mul_basis_into(Index i, Index j, const Scalar& c, VecBuilder& out) const override;
  const Vec& product(Index i, Index j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) {
    return a.n_ == b.n_ && a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  StructAlgebra() = default;
  std::size_t n_ = 0;
  std::vector<Vec> table_;
  Vec unit_;
  std::vector<std::string> labels_;
};

/// Lazy A^op.
class OppositeAlgebra final : public Algebra {
 public:
  explicit OppositeAlgebra(AlgebraPtr base) : base_(std::move(base)) {}
  std::size_t dim() const override { return base_->dim(); }
  Vec unit() const override { return base_->unit(); }
  std::string label(Index i) const override { return base_->label(i); }
  void mul_basis_into(Index i, Index j, const Scalar& c, VecBuilder& out) const override {
    base_->mul_basis_into(j, i, c, out);
  }

 private:
  AlgebraPtr base_;
};

/// Lazy componentwise product A_1 (x) ... (x) A_k, leftmost factor most
/// significant.
class TensorAlgebra final : public Algebra {
 public:
  explicit TensorAlgebra(std::vector<AlgebraPtr> factors);
  std::size_t dim() const override { return dim_; }
  Vec unit() const override;
  std::string label(Index i) const override;
  void mul_basis_into(Index i, Index j, const Scalar& c, VecBuilder& out) const override;
  const std::vector<AlgebraPtr>& factors() const noexcept { return factors_; }
  /// Basis coordinates of each factor, left to right.
  std::vector<Index> split(Index i) const;
  Index join(const std::vector<Index>& parts) const;

 private:
  std::vector<AlgebraPtr> factors_;
  std::vector<std::size_t> stride_;
  std::size_t dim_ = 1;
};

StructAlgebra opposite(const StructAlgebra& a);
StructAlgebra tensor_alg(const StructAlgebra& a, const StructAlgebra& b);
/// End_k(A) with the composition product; only depends on dim A.
StructAlgebra endo_algebra(const Algebra& a);

/// Linear map between algebras claimed to be a (anti-)homomorphism.
struct AlgMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  LinearMap map;
  bool anti = false;

  Vec operator()(const Vec& v) const { return map.apply(v); }
};

/// First basis pair (or the unit) where f fails to be multiplicative
/// (anti-multiplicative when f.anti).
std::optional<Witness> morphism_witness(const AlgMorphism& f, const par::SweepPlan& plan = {});

std::optional<Witness> associativity_witness(const Algebra& a, const par::SweepPlan& plan = {});
std::optional<Witness> unit_witness(const Algebra& a);

/// The two sides of the kernel criterion for unital linear maps f: A -> B.
struct KernelCriterion {
  bool homomorphism = false;        // f(xy) = f(x) f(y) on basis pairs
  bool kernel_left_ideal = false;   // ker(a (x) b -> f(a) b) is a left ideal of A (x) B^op
  std::size_t kernel_dim = 0;
};

/// Requires f(1) = 1; throws std::invalid_argument otherwise.
KernelCriterion hom_kernel_ideal_check(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& f);

}  // namespace hopfoid
