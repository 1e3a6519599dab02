#include "hopfoid/rational.hpp"

#include <stdexcept>

namespace hopfoid {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<unsigned long>(u >> 64);
  const auto lo = static_cast<unsigned long>(u);
  mpz_class z = hi;
  z <<= 64;
  z += lo;
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_i128(n, d);
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  const i128 g = gcd128(n, d);
  n /= g;
  d /= g;
  if (abs128(n) <= kLimit && d <= kLimit) {
    Rational r;
    r.num_ = static_cast<std::intptr_t>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  Rational r;
  r.num_ = reinterpret_cast<std::intptr_t>(new mpq_class(q));
  r.den_ = 0;
  return r;
}

Rational Rational::from_mpq(const mpq_class& q_in) {
  mpq_class q = q_in;
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    Rational r;
    r.num_ = static_cast<std::intptr_t>(n.get_si());
    r.den_ = d.get_si();
    return r;
  }
  Rational r;
  r.num_ = reinterpret_cast<std::intptr_t>(new mpq_class(q));
  r.den_ = 0;
  return r;
}

bool Rational::is_integer() const noexcept {
  if (is_big()) return big()->get_den() == 1;
  return den_ == 1;
}

int Rational::sign() const noexcept {
  if (is_big()) return sgn(*big());
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (is_big()) return *big();
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (is_big()) return big()->get_num().get_str() + "/" + big()->get_den().get_str();
  return std::to_string(static_cast<long long>(num_)) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return from_mpq(q);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.is_big() && !b.is_big()) {
    if (a.den_ == b.den_) return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
    return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a) {
  if (!a.is_big()) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  return Rational::from_mpq(-a.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.is_big() && !b.is_big()) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, 1);
    return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.is_big() && !b.is_big())
    return Rational::from_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.is_big() != b.is_big()) return false;
  if (a.is_big()) return *a.big() == *b.big();
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.is_big() && !b.is_big())
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

}  // namespace hopfoid
