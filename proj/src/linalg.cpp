#include "hopfoid/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopfoid/parallel.hpp"

namespace hopfoid {

// --- Vec ------------------------------------------------------------------

Vec Vec::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Vec v;
  v.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().first == t.first) {
      v.terms_.back().second += t.second;
      if (v.terms_.back().second.is_zero()) v.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

Vec Vec::unit(Index i, Scalar c) {
  Vec v;
  if (!c.is_zero()) v.terms_.emplace_back(i, std::move(c));
  return v;
}

Vec Vec::from_dense(std::span<const Scalar> dense) {
  Vec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) v.terms_.emplace_back(static_cast<Index>(i), dense[i]);
  return v;
}

Scalar Vec::operator[](Index i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, Index k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) return it->second;
  return {};
}

std::vector<Scalar> Vec::to_dense(std::size_t dim) const {
  std::vector<Scalar> out(dim);
  for (const auto& [i, c] : terms_) out.at(i) = c;
  return out;
}

Vec Vec::axpy(const Vec& a, const Scalar& c, const Vec& b) {
  if (c.is_zero() || b.is_zero()) return a;
  Vec out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      out.terms_.emplace_back(ib->first, c * ib->second);
      ++ib;
    } else {
      Scalar s = ia->second;
      s.add_product(c, ib->second);
      if (!s.is_zero()) out.terms_.emplace_back(ia->first, std::move(s));
      ++ia;
      ++ib;
    }
  }
  return out;
}

Vec& Vec::operator+=(const Vec& o) { return *this = axpy(*this, Scalar(1), o); }
Vec& Vec::operator-=(const Vec& o) { return *this = axpy(*this, Scalar(-1), o); }
Vec operator+(const Vec& a, const Vec& b) { return Vec::axpy(a, Scalar(1), b); }
Vec operator-(const Vec& a, const Vec& b) { return Vec::axpy(a, Scalar(-1), b); }
Vec operator-(const Vec& a) { return Scalar(-1) * a; }

Vec operator*(const Scalar& c, const Vec& v) {
  Vec out;
  if (c.is_zero()) return out;
  out.terms_.reserve(v.terms_.size());
  for (const auto& [i, x] : v.terms_) out.terms_.emplace_back(i, c * x);
  return out;
}

Vec tensor(const Vec& x, const Vec& y, std::size_t dim_y) {
  VecBuilder b;
  b.add_tensor(x, y, dim_y);
  return b.build();
}

void VecBuilder::add_scaled(const Vec& v, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    add(v);
    return;
  }
  for (const auto& [i, x] : v.terms()) terms_.emplace_back(i, c * x);
}

void VecBuilder::add_tensor(const Vec& x, const Vec& y, std::size_t dim_y, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, a] : x.terms()) {
    const Scalar ca = c.is_one() ? a : c * a;
    for (const auto& [j, b] : y.terms())
      terms_.emplace_back(static_cast<Index>(i * dim_y + j), ca.is_one() ? b : ca * b);
  }
}

// --- LinearMap ------------------------------------------------------------

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.columns_[j] = Vec::unit(static_cast<Index>(j));
  return m;
}

LinearMap LinearMap::from_function(std::size_t rows, std::size_t cols, const std::function<Vec(Index)>& image) {
  return LinearMap(rows, par::map<Vec>(cols, [&](std::size_t j) { return image(static_cast<Index>(j)); }));
}

Vec LinearMap::apply(const Vec& v) const {
  if (v.nnz() == 1 && v.terms()[0].second.is_one()) return columns_.at(v.terms()[0].first);
  VecBuilder b;
  for (const auto& [j, c] : v.terms()) b.add_scaled(columns_.at(j), c);
  return b.build();
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  if (other.rows() != cols()) throw std::invalid_argument("LinearMap::compose: dimension mismatch");
  LinearMap out(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) out.columns_[j] = apply(other.columns_[j]);
  return out;
}

LinearMap LinearMap::transpose() const {
  std::vector<std::vector<Vec::Term>> rows(rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, c] : columns_[j].terms()) rows[i].emplace_back(static_cast<Index>(j), c);
  LinearMap t(cols(), rows_);
  for (std::size_t i = 0; i < rows_; ++i) t.columns_[i] = Vec::from_terms(std::move(rows[i]));
  return t;
}

std::vector<Vec> LinearMap::row_vectors() const { return transpose().columns(); }

LinearMap tensor(const LinearMap& m1, const LinearMap& m2) {
  LinearMap out(m1.rows() * m2.rows(), m1.cols() * m2.cols());
  for (std::size_t j1 = 0; j1 < m1.cols(); ++j1)
    for (std::size_t j2 = 0; j2 < m2.cols(); ++j2)
      out.column(static_cast<Index>(j1 * m2.cols() + j2)) =
          tensor(m1.column(static_cast<Index>(j1)), m2.column(static_cast<Index>(j2)), m2.rows());
  return out;
}

// --- Echelon forms --------------------------------------------------------

bool EchelonBuilder::insert(Vec v) {
  // Reduce the leading entry until it is not an existing pivot.
  while (!v.is_zero()) {
    const Index lead = v.leading_index();
    if (lead >= ambient_) throw std::out_of_range("EchelonBuilder: index beyond ambient dimension");
    const int r = row_of_[lead];
    if (r < 0) break;
    v = Vec::axpy(v, -v.terms().front().second, rows_[static_cast<std::size_t>(r)]);
  }
  if (v.is_zero()) return false;
  const Scalar inv = v.terms().front().second.inverse();
  if (!inv.is_one()) v = inv * v;
  row_of_[v.leading_index()] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

Subspace EchelonBuilder::finish() && {
  // Process pivots from the right so each row is reduced against rows that
  // are already in final form.  Subtracting a final row never disturbs the
  // other pivot columns, so the original entries can be used as multipliers.
  std::vector<Index> pivots;
  for (Index c = 0; c < ambient_; ++c)
    if (row_of_[c] >= 0) pivots.push_back(c);
  std::vector<int> pos(ambient_, -1);
  for (std::size_t k = 0; k < pivots.size(); ++k) pos[pivots[k]] = static_cast<int>(k);

  std::vector<Vec> reduced(pivots.size());
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const Vec& row = rows_[static_cast<std::size_t>(row_of_[pivots[k]])];
    VecBuilder b;
    b.add(row);
    bool touched = false;
    for (const auto& [c, x] : row.terms()) {
      if (c == pivots[k] || pos[c] < 0) continue;
      b.add_scaled(reduced[static_cast<std::size_t>(pos[c])], -x);
      touched = true;
    }
    reduced[k] = touched ? b.build() : row;
  }
  Subspace s(ambient_);
  s.rows_ = std::move(reduced);
  s.pivots_ = std::move(pivots);
  for (std::size_t k = 0; k < s.pivots_.size(); ++k) s.pivot_row_[s.pivots_[k]] = static_cast<int>(k);
  return s;
}

Subspace Subspace::span(std::size_t ambient, std::span<const Vec> vectors) {
  EchelonBuilder b(ambient);
  for (const auto& v : vectors) b.insert(v);
  return std::move(b).finish();
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vec> basis;
  basis.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) basis.push_back(Vec::unit(static_cast<Index>(i)));
  return span(ambient, basis);
}

Vec Subspace::reduce(const Vec& v) const {
  VecBuilder b;
  bool touched = false;
  for (const auto& [c, x] : v.terms()) {
    if (c >= ambient_) throw std::out_of_range("Subspace::reduce: index beyond ambient dimension");
    const int r = pivot_row_[c];
    if (r < 0) continue;
    if (!touched) {
      b.add(v);
      touched = true;
    }
    b.add_scaled(rows_[static_cast<std::size_t>(r)], -x);
  }
  return touched ? b.build() : v;
}

Subspace kernel(const LinearMap& m) {
  const Subspace rows = Subspace::span(m.cols(), m.row_vectors());
  std::vector<Vec> basis;
  basis.reserve(m.cols() - rows.dim());
  for (Index f = 0; f < m.cols(); ++f) {
    if (rows.is_pivot(f)) continue;
    VecBuilder b;
    b.add(f, Scalar(1));
    for (std::size_t r = 0; r < rows.dim(); ++r) {
      const Scalar x = rows.basis()[r][f];
      if (!x.is_zero()) b.add(rows.pivots()[r], -x);
    }
    basis.push_back(b.build());
  }
  return Subspace::span(m.cols(), basis);
}

std::size_t rank(const LinearMap& m) {
  EchelonBuilder b(m.rows());
  for (const auto& c : m.columns()) b.insert(c);
  return b.rank();
}

Subspace image(const LinearMap& m) { return Subspace::span(m.rows(), m.columns()); }

std::optional<LinearMap> inverse(const LinearMap& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  // Row-reduce [M^T | I]: the rows of M^T are the columns of M.  The reduced
  // right block is (M^T)^{-1} = (M^{-1})^T.
  std::vector<Vec> aug;
  aug.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    VecBuilder b;
    b.add(m.column(static_cast<Index>(j)));
    b.add(static_cast<Index>(n + j), Scalar(1));
    aug.push_back(b.build());
  }
  const Subspace red = Subspace::span(2 * n, aug);
  if (red.dim() != n) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k)
    if (red.pivots()[k] != k) return std::nullopt;
  // Row k of (M^{-1})^T is column k of M^{-1}.
  LinearMap inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Vec::Term> terms;
    for (const auto& [c, x] : red.basis()[k].terms())
      if (c >= n) terms.emplace_back(static_cast<Index>(c - n), x);
    inv.column(static_cast<Index>(k)) = Vec::from_terms(std::move(terms));
  }
  return inv;
}

// --- Quotient -------------------------------------------------------------

Quotient::Quotient(Subspace sub, std::optional<std::vector<Vec>> complement) : sub_(std::move(sub)) {
  const std::size_t n = sub_.ambient();
  free_pos_.assign(n, -1);
  for (Index c = 0; c < n; ++c) {
    if (sub_.is_pivot(c)) continue;
    free_pos_[c] = static_cast<int>(free_cols_.size());
    free_cols_.push_back(c);
  }
  const std::size_t k = free_cols_.size();
  if (!complement) {
    section_images_.reserve(k);
    for (Index c : free_cols_) section_images_.push_back(Vec::unit(c));
    return;
  }
  if (complement->size() != k)
    throw std::invalid_argument("Quotient: complement has " + std::to_string(complement->size()) +
                                " vectors, expected " + std::to_string(k));
  // Column j of `m`: complement vector j reduced modulo sub, in free coordinates.
  LinearMap m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Vec::Term> terms;
    for (const auto& [c, x] : sub_.reduce((*complement)[j]).terms())
      terms.emplace_back(static_cast<Index>(free_pos_[c]), x);
    m.column(static_cast<Index>(j)) = Vec::from_terms(std::move(terms));
  }
  auto inv = inverse(m);
  if (!inv) throw std::invalid_argument("Quotient: complement vectors are dependent modulo the subspace");
  change_ = std::move(*inv);
  section_images_ = std::move(*complement);
}

Vec Quotient::project(const Vec& v) const {
  std::vector<Vec::Term> terms;
  for (const auto& [c, x] : sub_.reduce(v).terms()) terms.emplace_back(static_cast<Index>(free_pos_[c]), x);
  Vec free = Vec::from_terms(std::move(terms));
  return change_ ? change_->apply(free) : free;
}

Vec Quotient::section(const Vec& y) const {
  VecBuilder b;
  for (const auto& [j, x] : y.terms()) b.add_scaled(section_images_.at(j), x);
  return b.build();
}

LinearMap Quotient::projection_map() const {
  return LinearMap::from_function(dim(), ambient(), [&](Index j) { return project(Vec::unit(j)); });
}

LinearMap Quotient::section_map() const { return LinearMap(ambient(), section_images_); }

std::optional<std::pair<std::size_t, std::size_t>> left_ideal_witness(
    const Subspace& sub, std::size_t generator_count, const std::function<Vec(std::size_t, const Vec&)>& left_multiply) {
  const std::size_t rows = sub.dim();
  auto bad = par::first_failure(generator_count * rows, [&](std::size_t k) {
    const std::size_t g = k / rows;
    const std::size_t r = k % rows;
    return !sub.contains(left_multiply(g, sub.basis()[r]));
  });
  if (!bad) return std::nullopt;
  return std::make_pair(*bad / rows, *bad % rows);
}

}  // namespace hopfoid
