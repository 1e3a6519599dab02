#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfoid/doubles.hpp"

namespace hopfoid {

using StructPtr = std::shared_ptr<const StructAlgebra>;

/// H (x)_A ... (x)_A H (n factors) as a quotient of H^{(x)n} with a chosen
/// section.  Coordinates of the quotient are implementation specific.
class TensorQuotient {
 public:
  virtual ~TensorQuotient() = default;
  virtual std::size_t factors() const = 0;
  virtual std::size_t factor_dim() const = 0;
  std::size_t ambient() const;
  virtual std::size_t dim() const = 0;
  virtual Vec project(const Vec& v) const = 0;
  virtual Vec lift(const Vec& y) const = 0;
  /// First basis element e of H^{(x)n} for which e - lift(project(e)) is not
  /// shown to lie in I_n.
  virtual std::optional<Witness> section_witness(const par::SweepPlan& plan) const = 0;
};

using QuotientPtr = std::shared_ptr<const TensorQuotient>;

/// Source and target data shared by every quotient construction.
struct Anchor {
  StructPtr total;
  StructPtr base;
  LinearMap alpha;  // base -> total
  LinearMap beta;   // base -> total

  /// 1 (x) .. (x) beta(a) (x) 1 (x) .. - 1 (x) .. (x) 1 (x) alpha(a) (x) .. with beta(a) at `pos`.
  Vec ideal_generator(std::size_t n, std::size_t pos, Index a) const;
};

/// I_n spanned explicitly by generator * basis products, quotient by echelon
/// reduction.  Only sensible at small dimension.
class GenericQuotient : public TensorQuotient {
 public:
  GenericQuotient(Anchor anchor, std::size_t n, std::optional<std::vector<Vec>> complement = std::nullopt);

  std::size_t factors() const override { return n_; }
  std::size_t factor_dim() const override { return anchor_.total->dim(); }
  std::size_t dim() const override { return quotient_.dim(); }
  Vec project(const Vec& v) const override { return quotient_.project(v); }
  Vec lift(const Vec& y) const override { return quotient_.section(y); }
  std::optional<Witness> section_witness(const par::SweepPlan& plan) const override;

  const Subspace& ideal() const noexcept { return quotient_.subspace(); }

 private:
  Anchor anchor_;
  std::size_t n_;
  Quotient quotient_;
};

/// I_n spanned explicitly, as a subspace of H^{(x)n}.
Subspace tensor_ideal(const Anchor& anchor, std::size_t n);

/// H = End(A) with H (x)_A .. (x)_A H identified with Hom(A^{(x)n}, A) by T_n.
/// Coordinate of (inputs I, output k) is I * dim A + k.
class EndQuotient : public TensorQuotient {
 public:
  EndQuotient(Anchor anchor, std::size_t n);

  std::size_t factors() const override { return n_; }
  std::size_t factor_dim() const override { return anchor_.total->dim(); }
  std::size_t dim() const override;
  Vec project(const Vec& v) const override;
  Vec lift(const Vec& y) const override;
  std::optional<Witness> section_witness(const par::SweepPlan& plan) const override;

  /// T_n as a matrix.
  LinearMap t_map() const;

 private:
  Anchor anchor_;
  std::size_t n_;
  std::size_t na_;
  Vec one_;  // unit of A
};

/// H = V # A with coordinates h (x) (1 # b) (n = 2) or h (x) (1 # b) (x) (1 # c)
/// (n = 3), at h * dim A + b and h * dim A^2 + b * dim A + c.
class SmashQuotient : public TensorQuotient {
 public:
  SmashQuotient(Anchor anchor, SmashPtr smash, std::size_t n);

  std::size_t factors() const override { return n_; }
  std::size_t factor_dim() const override { return smash_->dim(); }
  std::size_t dim() const override;
  Vec project(const Vec& v) const override;
  Vec lift(const Vec& y) const override;
  /// e - lift(project(e)) written explicitly as sums of generator * element.
  std::optional<Witness> section_witness(const par::SweepPlan& plan) const override;

 private:
  /// h (x) (u # b) -> beta(u) h (x) (1 # b), in n = 2 coordinates.
  void project2(Index h, Index ub, const Scalar& c, VecBuilder& out) const;

  Anchor anchor_;
  SmashPtr smash_;
  std::size_t n_;
};

struct Bialgebroid {
  std::string name;
  Anchor anchor;
  QuotientPtr q2;
  QuotientPtr q3;
  LinearMap delta;   // total -> q2 coordinates
  LinearMap counit;  // total -> base
  /// Algebra generators of the total algebra; empty means the whole basis.
  std::vector<Vec> generators;

  const StructAlgebra& H() const { return *anchor.total; }
  const StructAlgebra& A() const { return *anchor.base; }
  /// gamma o Delta, in H (x) H.
  Vec gamma_delta(const Vec& h) const { return q2->lift(delta.apply(h)); }
  std::vector<Vec> generator_list() const;
};

struct HopfAlgebroid {
  Bialgebroid bi;
  LinearMap tau;
  std::optional<LinearMap> tau_inverse;

  /// theta = epsilon tau alpha.
  LinearMap theta() const;
};

enum class Strategy { direct, structural, automatic };

Strategy parse_strategy(const std::string& s);
std::string to_string(Strategy s);

struct VerifyOptions {
  Strategy strategy = Strategy::automatic;
  std::size_t direct_dim_bound = 100000;
  par::SweepPlan plan;
};

/// direct iff (dim H)^3 <= bound under `automatic`; throws std::invalid_argument
/// when direct is requested above the bound.
Strategy resolve_strategy(const Bialgebroid& b, const VerifyOptions& opts);

/// C1-C5, with C4 computed (direct) or replaced by S1, S2 (structural).
VerificationReport verify_bialgebroid(const Bialgebroid& b, const VerifyOptions& opts, const std::string& prefix = "");
/// Bialgebroid checks plus H1-H5.
VerificationReport verify_hopf_algebroid(const HopfAlgebroid& h, const VerifyOptions& opts,
                                         const std::string& prefix = "");

/// ker Phi, Phi(h1 (x) h2 (x) h3) = p(gamma Delta(h1) (h2 (x) h3)).
Subspace phi_kernel(const Bialgebroid& b);

/// T1(h)(a) = epsilon(h alpha(a)) on matrix units of End(A).
LinearMap associated_action(const Bialgebroid& b);
VerificationReport verify_associated_action(const Bialgebroid& b, const par::SweepPlan& plan = {},
                                            const std::string& prefix = "");

/// Structure-map squares for (T, t): b1 -> b2.
VerificationReport morphism_check(const Bialgebroid& b1, const Bialgebroid& b2, const LinearMap& T, const LinearMap& t,
                                  const par::SweepPlan& plan = {}, const std::string& prefix = "");

Bialgebroid end_bialgebroid(const StructPtr& a);
/// ker T_n = I_n for n = 2, 3 and ker Phi = Ann(m).
VerificationReport verify_end_identification(const Bialgebroid& end, const std::string& prefix = "");

/// (T1, id) into End(A), checked with morphism_check; T1 bijectivity reported
/// when `expect_bijective`.
VerificationReport canonical_morphism(const Bialgebroid& b, bool expect_bijective, const par::SweepPlan& plan = {},
                                      const std::string& prefix = "");

HopfAlgebroid coarse_hopf_algebroid(const StructPtr& a);

/// V # A over V for a D(A)-module algebra V.
struct SmashAlgebroid {
  HopfAlgebroid hopf;
  DoublePtr dbl;
  ModuleAction action;  // D(A) on V
  SmashPtr smash;
  SpecialElement d0;
};

/// Throws std::invalid_argument with the witness pair if m_op R != m on V.
SmashAlgebroid smash_hopf_algebroid(const DoublePtr& d, const ModuleAction& action, const par::SweepPlan& plan = {});

/// Hopf algebroid checks plus the smash-specific identities: the R condition
/// against C1, beta(a(2)(u))(1 # a(1)) = (1 # a) beta(u), tau alpha = beta d0,
/// theta = d0 action and tau tau^-1 = id.
VerificationReport verify_smash_algebroid(const SmashAlgebroid& s, const VerifyOptions& opts,
                                          const std::string& prefix = "");

}  // namespace hopfoid
