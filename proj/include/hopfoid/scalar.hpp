#pragma once

#include <string>
#include <vector>

#include "hopfoid/rational.hpp"

namespace hopfoid {

class CycloScalar;

/// The cyclotomic field Q(zeta_d) for odd d > 1, in the power basis
/// {1, zeta, ..., zeta^(phi(d)-1)} reduced modulo the d-th cyclotomic
/// polynomial.  Instances are interned and live for the whole process.
class CycloField {
 public:
  /// Returns the interned field for `d`; throws std::invalid_argument unless
  /// d is odd and greater than one.
  static const CycloField& get(int d);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  /// Integer coefficients of Phi_d, lowest degree first, monic.
  const std::vector<long long>& cyclotomic_poly() const noexcept { return poly_; }

  /// zeta^k for any integer k.
  CycloScalar zeta_pow(long long k) const;

  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

 private:
  explicit CycloField(int d);
  friend class CycloScalar;

  int order_;
  int degree_;
  std::vector<long long> poly_;
  std::vector<std::vector<long long>> zeta_powers_;  // zeta^k, k in [0, d)
};

/// Convenience alias matching the field-handle operation.
inline const CycloField& cyclo_field(int d) { return CycloField::get(d); }

/// Exact element of Q(zeta_d).
///
/// Coefficients are kept fully reduced with trailing zeros trimmed, so a
/// plain rational carries no field at all and mixes freely with any field.
/// Equality is coordinate-wise.
class CycloScalar {
 public:
  CycloScalar() = default;
  CycloScalar(long long n) : CycloScalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  CycloScalar(Rational r);                                // NOLINT(google-explicit-constructor)
  CycloScalar(const CycloField& field, std::vector<Rational> coeffs);

  const CycloField* field() const noexcept { return field_; }
  /// Trimmed coordinates; coordinate k multiplies zeta^k.
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  bool is_rational() const noexcept { return c_.size() <= 1; }

  CycloScalar inverse() const;

  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }
  friend CycloScalar operator-(const CycloScalar& a);

  CycloScalar& operator+=(const CycloScalar& b);
  CycloScalar& operator-=(const CycloScalar& b);
  CycloScalar& operator*=(const CycloScalar& b) { return *this = *this * b; }

  /// *this += a * b without an intermediate copy in the rational case.
  void add_product(const CycloScalar& a, const CycloScalar& b);

  friend bool operator==(const CycloScalar& a, const CycloScalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  /// Human-readable form in the power basis, e.g. "1 + 2*z^3".
  std::string str() const;
  /// phi(d) strings "p/q" in basis order; `field` fixes the length.
  std::vector<std::string> to_strings(const CycloField& field) const;
  static CycloScalar from_strings(const CycloField& field, const std::vector<std::string>& coords);

 private:
  static const CycloField* common_field(const CycloScalar& a, const CycloScalar& b);
  void trim();

  const CycloField* field_ = nullptr;
  std::vector<Rational> c_;
};

/// The quantum parameter q = zeta^e of a cyclotomic field, with the
/// q-integers, q-factorials and q-binomials in base q^2.
class QRoot {
 public:
  /// Throws std::invalid_argument unless gcd(e, d) == 1.
  explicit QRoot(const CycloField& field, int exponent = 1);

  const CycloField& field() const noexcept { return *field_; }
  int order() const noexcept { return field_->order(); }
  int exponent() const noexcept { return exponent_; }

  /// q^k for any integer k.
  CycloScalar pow(long long k) const;
  /// (i)_{q^2} = 1 + q^2 + ... + q^{2(i-1)}.
  CycloScalar q_int(int i) const;
  /// (i)_{q^2}! with (0)_{q^2}! = 1.
  CycloScalar q_factorial(int i) const;
  /// Gaussian binomial in base q^2 by the Pascal recursion; requires
  /// 0 <= r <= m < d.
  CycloScalar q_binomial(int m, int r) const;

 private:
  const CycloField* field_;
  int exponent_;
};

}  // namespace hopfoid
