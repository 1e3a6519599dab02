#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hopfoid {

/// Exact rational number in lowest terms.
///
/// Values whose numerator and denominator fit in 62 bits are stored inline;
/// anything larger spills to a heap-allocated GMP rational.  The choice of
/// representation is canonical (a value is big iff it does not fit inline),
/// so structural equality is value equality.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(long long n) noexcept : num_(n), den_(1) {  // NOLINT(google-explicit-constructor)
    if (n > kLimit || n < -kLimit) *this = from_mpq(mpq_class(static_cast<long>(n)));
  }
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q) { *this = from_mpq(q); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.is_big()) num_ = reinterpret_cast<std::intptr_t>(new mpq_class(*o.big()));
  }
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) {
    o.num_ = 0;
    o.den_ = 1;
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      Rational tmp(o);
      swap(tmp);
    }
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    swap(o);
    return *this;
  }
  ~Rational() {
    if (is_big()) delete big();
  }

  void swap(Rational& o) noexcept {
    std::swap(num_, o.num_);
    std::swap(den_, o.den_);
  }

  bool is_zero() const noexcept { return den_ == 1 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_integer() const noexcept;
  int sign() const noexcept;

  mpq_class to_mpq() const;
  /// "p/q" with q >= 1, always including the denominator.
  std::string str() const;
  /// Accepts "p", "p/q", with optional sign; rejects zero denominators.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  // Inline values satisfy |num| <= kLimit and 1 <= den <= kLimit.  den_ == 0
  // marks a spilled value whose mpq_class* is stored in num_.
  static constexpr long long kLimit = (1LL << 62) - 1;

  bool is_big() const noexcept { return den_ == 0; }
  mpq_class* big() const noexcept { return reinterpret_cast<mpq_class*>(num_); }

  static Rational from_mpq(const mpq_class& q);
  static Rational from_i128(__int128 n, __int128 d);

  std::intptr_t num_ = 0;
  long long den_ = 1;
};

}  // namespace hopfoid
