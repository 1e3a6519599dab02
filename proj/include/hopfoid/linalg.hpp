#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfoid/scalar.hpp"

namespace hopfoid {

using Index = std::uint32_t;
using Scalar = CycloScalar;

/// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
///
/// Tensor coordinates are flattened row-major with the leftmost factor most
/// significant: x (x) y in V (x) W has index i * dim W + j.  Every module
/// relies on this convention.
class Vec {
 public:
  using Term = std::pair<Index, Scalar>;

  Vec() = default;
  /// Sorts and merges duplicate indices, dropping zeros.
  static Vec from_terms(std::vector<Term> terms);
  static Vec unit(Index i, Scalar c = Scalar(1));
  static Vec from_dense(std::span<const Scalar> dense);

  const std::vector<Term>& terms() const& noexcept { return terms_; }
  /// By value on temporaries, so range-for over f(x).terms() stays valid.
  std::vector<Term> terms() && noexcept { return std::move(terms_); }
  std::size_t nnz() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar operator[](Index i) const;
  Index leading_index() const { return terms_.front().first; }
  std::vector<Scalar> to_dense(std::size_t dim) const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a);
  friend Vec operator*(const Scalar& c, const Vec& v);
  friend bool operator==(const Vec& a, const Vec& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  /// Returns a + c * b in one merge pass.
  static Vec axpy(const Vec& a, const Scalar& c, const Vec& b);

 private:
  std::vector<Term> terms_;
};

/// x (x) y with y living in a space of dimension `dim_y`.
Vec tensor(const Vec& x, const Vec& y, std::size_t dim_y);
/// Splits a flattened index of V (x) W into its two coordinates.
inline std::pair<Index, Index> split_index(Index k, std::size_t dim_w) {
  return {static_cast<Index>(k / dim_w), static_cast<Index>(k % dim_w)};
}

/// Term collector used to build vectors from many contributions.
class VecBuilder {
 public:
  void add(Index i, const Scalar& c) {
    if (!c.is_zero()) terms_.emplace_back(i, c);
  }
  void add(const Vec& v) {
    for (const auto& t : v.terms()) terms_.push_back(t);
  }
  void add_scaled(const Vec& v, const Scalar& c);
  /// Adds c * (x (x) y).
  void add_tensor(const Vec& x, const Vec& y, std::size_t dim_y, const Scalar& c = Scalar(1));
  Vec build() { return Vec::from_terms(std::move(terms_)); }

 private:
  std::vector<Vec::Term> terms_;
};

/// Linear map k^cols -> k^rows, stored as the images of the basis vectors.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  LinearMap(std::size_t rows, std::vector<Vec> columns) : rows_(rows), columns_(std::move(columns)) {}
  static LinearMap identity(std::size_t n);
  static LinearMap from_function(std::size_t rows, std::size_t cols, const std::function<Vec(Index)>& image);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Vec& column(Index j) const { return columns_[j]; }
  Vec& column(Index j) { return columns_[j]; }
  const std::vector<Vec>& columns() const noexcept { return columns_; }
  Scalar entry(Index i, Index j) const { return columns_[j][i]; }

  Vec apply(const Vec& v) const;
  /// this o other
  LinearMap compose(const LinearMap& other) const;
  LinearMap transpose() const;
  std::vector<Vec> row_vectors() const;
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<Vec> columns_;
};

using Mat = LinearMap;

/// Kronecker product with the leftmost factor most significant.
LinearMap tensor(const LinearMap& m1, const LinearMap& m2);

/// Subspace of k^n held as a canonical reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, -1) {}
  /// Row-reduces an arbitrary spanning set.
  static Subspace span(std::size_t ambient, std::span<const Vec> vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec>& basis() const& noexcept { return rows_; }
  std::vector<Vec> basis() && noexcept { return std::move(rows_); }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }
  bool is_pivot(Index c) const { return pivot_row_[c] >= 0; }

  /// v minus its component along the subspace, supported off the pivots.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  friend class EchelonBuilder;
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<Index> pivots_;
  std::vector<int> pivot_row_;
};

/// Incremental Gaussian elimination with first-nonzero pivoting.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient), row_of_(ambient, -1) {}
  /// Returns true if v was independent of everything inserted so far.
  bool insert(Vec v);
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Back-substitutes into canonical reduced form.
  Subspace finish() &&;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<int> row_of_;
};

/// Null space of m as a canonical subspace of k^cols.
Subspace kernel(const LinearMap& m);
std::size_t rank(const LinearMap& m);
/// Inverse of a square map; std::nullopt if singular.
std::optional<LinearMap> inverse(const LinearMap& m);
/// Span of the columns of m.
Subspace image(const LinearMap& m);

/// Quotient k^n / sub with projection p and a linear section (right inverse).
class Quotient {
 public:
  Quotient() = default;
  /// Section image spanned by the standard basis vectors at the non-pivot
  /// coordinates of `sub` unless `complement` is given.  A complement must
  /// have exactly n - dim(sub) vectors independent modulo `sub`; otherwise
  /// std::invalid_argument is thrown.
  Quotient(Subspace sub, std::optional<std::vector<Vec>> complement = std::nullopt);

  std::size_t ambient() const noexcept { return sub_.ambient(); }
  std::size_t dim() const noexcept { return free_cols_.size(); }
  const Subspace& subspace() const noexcept { return sub_; }

  Vec project(const Vec& v) const;
  Vec section(const Vec& y) const;
  LinearMap projection_map() const;
  LinearMap section_map() const;

 private:
  Subspace sub_;
  std::vector<Index> free_cols_;      // non-pivot columns in order
  std::vector<int> free_pos_;         // column -> position among free columns
  std::vector<Vec> section_images_;   // section of each quotient basis vector
  std::optional<LinearMap> change_;   // reduced free coordinates -> quotient coordinates
};

/// Smallest witness g such that left multiplication by generator g moves some
/// basis vector of `sub` outside it: returns (generator, basis row) or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> left_ideal_witness(
    const Subspace& sub, std::size_t generator_count, const std::function<Vec(std::size_t, const Vec&)>& left_multiply);

}  // namespace hopfoid
