#include "hopfoid/algebra.hpp"

#include <sstream>

namespace hopfoid {

Vec Algebra::mul_basis(Index i, Index j) const {
  VecBuilder b;
  mul_basis_into(i, j, Scalar(1), b);
  return b.build();
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  VecBuilder b;
  for (const auto& [i, ci] : x.terms())
    for (const auto& [j, cj] : y.terms()) mul_basis_into(i, j, ci * cj, b);
  return b.build();
}

LinearMap Algebra::left_mult_matrix(const Vec& x) const {
  return LinearMap::from_function(dim(), dim(), [&](Index j) { return mul(x, Vec::unit(j)); });
}

LinearMap Algebra::right_mult_matrix(const Vec& x) const {
  return LinearMap::from_function(dim(), dim(), [&](Index j) { return mul(Vec::unit(j), x); });
}

std::string Algebra::format(const Vec& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one())
      os << label(i);
    else
      os << "(" << c.str() << ")*" << label(i);
  }
  return os.str();
}

StructAlgebra::StructAlgebra(std::vector<Vec> table, Vec unit, std::vector<std::string> labels,
                             const par::SweepPlan& plan)
    : table_(std::move(table)), unit_(std::move(unit)), labels_(std::move(labels)) {
  std::size_t n = 0;
  while (n * n < table_.size()) ++n;
  if (n * n != table_.size()) throw std::invalid_argument("multiplication table is not square");
  n_ = n;
  if (!labels_.empty() && labels_.size() != n_) throw std::invalid_argument("label count does not match dimension");
  if (auto w = unit_witness(*this))
    throw AlgebraError("unit law fails at " + w->note, w->indices);
  if (auto w = associativity_witness(*this, plan))
    throw AlgebraError("associativity fails at " + w->note, w->indices);
}

StructAlgebra StructAlgebra::from_products(std::size_t n, const std::function<Vec(Index, Index)>& product, Vec unit,
                                           std::vector<std::string> labels, const par::SweepPlan& plan) {
  auto table = par::map<Vec>(n * n, [&](std::size_t k) {
    return product(static_cast<Index>(k / n), static_cast<Index>(k % n));
  });
  return StructAlgebra(std::move(table), std::move(unit), std::move(labels), plan);
}

StructAlgebra StructAlgebra::materialize(const Algebra& a, const par::SweepPlan& plan) {
  std::vector<std::string> labels(a.dim());
  for (Index i = 0; i < a.dim(); ++i) labels[i] = a.label(i);
  return from_products(
      a.dim(), [&](Index i, Index j) { return a.mul_basis(i, j); }, a.unit(), std::move(labels), plan);
}

StructAlgebra StructAlgebra::matrix_algebra(std::size_t n) {
  StructAlgebra m;
  m.n_ = n * n;
  m.table_.resize(m.n_ * m.n_);
  std::vector<Vec::Term> unit;
  for (std::size_t i = 0; i < n; ++i) {
    unit.emplace_back(static_cast<Index>(i * n + i), Scalar(1));
    for (std::size_t j = 0; j < n; ++j) {
      m.labels_.push_back("E" + std::to_string(i) + std::to_string(j));
      for (std::size_t l = 0; l < n; ++l)
        m.table_[(i * n + j) * m.n_ + (j * n + l)] = Vec::unit(static_cast<Index>(i * n + l));
    }
  }
  m.unit_ = Vec::from_terms(std::move(unit));
  return m;
}

std::string StructAlgebra::label(Index i) const {
  return labels_.empty() ? "e" + std::to_string(i) : labels_[i];
}

void StructAlgebra::mul_basis_into(Index i, Index j, const Scalar& c, VecBuilder& out) const {
  out.add_scaled(product(i, j), c);
}

TensorAlgebra::TensorAlgebra(std::vector<AlgebraPtr> factors) : factors_(std::move(factors)) {
  stride_.assign(factors_.size(), 1);
  for (std::size_t k = factors_.size(); k-- > 0;) {
    stride_[k] = dim_;
    dim_ *= factors_[k]->dim();
  }
}

std::vector<Index> TensorAlgebra::split(Index i) const {
  std::vector<Index> parts(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    parts[k] = static_cast<Index>(i / stride_[k]);
    i %= static_cast<Index>(stride_[k]);
  }
  return parts;
}

Index TensorAlgebra::join(const std::vector<Index>& parts) const {
  std::size_t i = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) i += parts[k] * stride_[k];
  return static_cast<Index>(i);
}

Vec TensorAlgebra::unit() const {
  Vec u = Vec::unit(0);
  std::size_t d = 1;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    u = tensor(factors_[k]->unit(), u, d);
    d *= factors_[k]->dim();
  }
  return u;
}

std::string TensorAlgebra::label(Index i) const {
  const auto parts = split(i);
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += "(x)";
    s += factors_[k]->label(parts[k]);
  }
  return s;
}

void TensorAlgebra::mul_basis_into(Index i, Index j, const Scalar& c, VecBuilder& out) const {
  const auto pi = split(i);
  const auto pj = split(j);
  Vec acc = Vec::unit(0, c);
  std::size_t d = 1;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    acc = tensor(factors_[k]->mul_basis(pi[k], pj[k]), acc, d);
    if (acc.is_zero()) return;
    d *= factors_[k]->dim();
  }
  out.add(acc);
}

StructAlgebra opposite(const StructAlgebra& a) {
  return StructAlgebra::from_products(
      a.dim(), [&](Index i, Index j) { return a.product(j, i); }, a.unit(), a.labels());
}

StructAlgebra tensor_alg(const StructAlgebra& a, const StructAlgebra& b) {
  auto pa = std::make_shared<StructAlgebra>(a);
  auto pb = std::make_shared<StructAlgebra>(b);
  return StructAlgebra::materialize(TensorAlgebra({pa, pb}));
}

StructAlgebra endo_algebra(const Algebra& a) { return StructAlgebra::matrix_algebra(a.dim()); }

std::optional<Witness> unit_witness(const Algebra& a) {
  const Vec one = a.unit();
  for (Index i = 0; i < a.dim(); ++i) {
    const Vec e = Vec::unit(i);
    if (a.mul(one, e) != e || a.mul(e, one) != e)
      return Witness{{i}, {a.label(i)}, "1*e or e*1 differs from e = " + a.label(i)};
  }
  return std::nullopt;
}

std::optional<Witness> associativity_witness(const Algebra& a, const par::SweepPlan& plan) {
  const std::size_t n = a.dim();
  // Sweep over pairs (i, j); each visit checks every k.
  auto bad = par::first_failure(n * n, plan, [&](std::size_t ij) {
    const Index i = static_cast<Index>(ij / n), j = static_cast<Index>(ij % n);
    const Vec eij = a.mul_basis(i, j);
    for (Index k = 0; k < n; ++k) {
      VecBuilder rhs;
      for (const auto& [m, c] : a.mul_basis(j, k).terms()) a.mul_basis_into(i, m, c, rhs);
      VecBuilder lhs;
      for (const auto& [m, c] : eij.terms()) a.mul_basis_into(m, k, c, lhs);
      if (lhs.build() != rhs.build()) return true;
    }
    return false;
  });
  if (!bad) return std::nullopt;
  const Index i = static_cast<Index>(*bad / n), j = static_cast<Index>(*bad % n);
  const Vec eij = a.mul_basis(i, j);
  for (Index k = 0; k < n; ++k) {
    Vec lhs = a.mul(eij, Vec::unit(k));
    Vec rhs = a.mul(Vec::unit(i), a.mul_basis(j, k));
    if (lhs != rhs)
      return Witness{{i, j, k},
                     {a.label(i), a.label(j), a.label(k)},
                     "(" + a.label(i) + "*" + a.label(j) + ")*" + a.label(k) + " != " + a.label(i) + "*(" + a.label(j) +
                         "*" + a.label(k) + ")"};
  }
  return Witness{{i, j}, {a.label(i), a.label(j)}, "associativity"};
}

std::optional<Witness> morphism_witness(const AlgMorphism& f, const par::SweepPlan& plan) {
  const Algebra& s = *f.source;
  const Algebra& t = *f.target;
  if (f.map.apply(s.unit()) != t.unit()) return Witness{{}, {}, "f(1) != 1"};
  const std::size_t n = s.dim();
  std::vector<Vec> img(n);
  for (Index i = 0; i < n; ++i) img[i] = f.map.column(i);
  auto fails = [&](std::size_t ij) {
    const Index i = static_cast<Index>(ij / n), j = static_cast<Index>(ij % n);
    const Vec lhs = f.map.apply(s.mul_basis(i, j));
    const Vec rhs = f.anti ? t.mul(img[j], img[i]) : t.mul(img[i], img[j]);
    return lhs != rhs;
  };
  auto bad = par::first_failure(n * n, plan, fails);
  if (!bad) return std::nullopt;
  const Index i = static_cast<Index>(*bad / n), j = static_cast<Index>(*bad % n);
  return Witness{{i, j},
                 {s.label(i), s.label(j)},
                 std::string(f.anti ? "f(xy) != f(y)f(x)" : "f(xy) != f(x)f(y)") + " at x = " + s.label(i) +
                     ", y = " + s.label(j)};
}

KernelCriterion hom_kernel_ideal_check(const AlgebraPtr& a, const AlgebraPtr& b, const LinearMap& f) {
  if (f.apply(a->unit()) != b->unit()) throw std::invalid_argument("kernel criterion needs f(1) = 1");
  KernelCriterion out;
  out.homomorphism = !morphism_witness(AlgMorphism{a, b, f, false}).has_value();

  const std::size_t nb = b->dim();
  // F(a_i (x) b_j) = f(a_i) b_j
  LinearMap big_f = LinearMap::from_function(nb, a->dim() * nb, [&](Index k) {
    auto [i, j] = split_index(k, nb);
    return b->mul(f.column(i), Vec::unit(j));
  });
  const Subspace ker = kernel(big_f);
  out.kernel_dim = ker.dim();
  TensorAlgebra ring({a, std::make_shared<OppositeAlgebra>(b)});
  auto w = left_ideal_witness(ker, ring.dim(), [&](std::size_t g, const Vec& v) {
    return ring.mul(Vec::unit(static_cast<Index>(g)), v);
  });
  out.kernel_left_ideal = !w.has_value();
  return out;
}

}  // namespace hopfoid
