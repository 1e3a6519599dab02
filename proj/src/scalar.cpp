#include "hopfoid/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfoid {

namespace {

using Poly = std::vector<long long>;

// Exact division of integer polynomials with monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division is not exact");
  return quot;
}

Poly cyclotomic(int d) {
  Poly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = divide_monic(p, cyclotomic(e));
  return p;
}

// In place reduction of a coefficient vector of arbitrary length mod Phi.
void reduce_mod(std::vector<Rational>& c, const Poly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k].is_zero()) continue;
    const Rational lead = c[k];
    for (std::size_t i = 0; i < deg; ++i)
      if (phi[i] != 0) c[k - deg + i] -= lead * Rational(phi[i]);
    c[k] = Rational();
  }
  if (c.size() > deg) c.resize(deg);
}

}  // namespace

// --- CycloField -----------------------------------------------------------

CycloField::CycloField(int d) : order_(d), poly_(cyclotomic(d)) {
  degree_ = static_cast<int>(poly_.size()) - 1;
  zeta_powers_.reserve(static_cast<std::size_t>(d));
  Poly cur(static_cast<std::size_t>(degree_), 0);
  cur[0] = 1;
  for (int k = 0; k < d; ++k) {
    zeta_powers_.push_back(cur);
    // multiply by x and reduce
    Poly next(static_cast<std::size_t>(degree_) + 1, 0);
    for (int i = 0; i < degree_; ++i) next[static_cast<std::size_t>(i) + 1] = cur[static_cast<std::size_t>(i)];
    const long long lead = next[static_cast<std::size_t>(degree_)];
    for (int i = 0; i < degree_; ++i) next[static_cast<std::size_t>(i)] -= lead * poly_[static_cast<std::size_t>(i)];
    next.pop_back();
    cur = next;
  }
}

const CycloField& CycloField::get(int d) {
  if (d <= 1 || d % 2 == 0) throw std::invalid_argument("d must be odd and greater than 1 (got " + std::to_string(d) + ")");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[d];
  if (!slot) slot.reset(new CycloField(d));
  return *slot;
}

CycloScalar CycloField::zeta_pow(long long k) const {
  long long r = k % order_;
  if (r < 0) r += order_;
  const Poly& p = zeta_powers_[static_cast<std::size_t>(r)];
  std::vector<Rational> c(p.begin(), p.end());
  return CycloScalar(*this, std::move(c));
}

// --- CycloScalar ----------------------------------------------------------

CycloScalar::CycloScalar(Rational r) {
  if (!r.is_zero()) c_.push_back(std::move(r));
}

CycloScalar::CycloScalar(const CycloField& field, std::vector<Rational> coeffs) : field_(&field), c_(std::move(coeffs)) {
  reduce_mod(c_, field.poly_);
  trim();
}

void CycloScalar::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.size() <= 1) field_ = nullptr;
}

const CycloField* CycloScalar::common_field(const CycloScalar& a, const CycloScalar& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) throw std::invalid_argument("CycloScalar: mixing different cyclotomic fields");
  return a.field_ ? a.field_ : b.field_;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& b) {
  const CycloField* f = common_field(*this, b);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  field_ = f;
  trim();
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& b) {
  const CycloField* f = common_field(*this, b);
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  field_ = f;
  trim();
  return *this;
}

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar r = a;
  r += b;
  return r;
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar r = a;
  r -= b;
  return r;
}

CycloScalar operator-(const CycloScalar& a) {
  CycloScalar r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  if (a.c_.size() == 1) {
    CycloScalar r = b;
    for (auto& x : r.c_) x *= a.c_[0];
    r.trim();
    return r;
  }
  if (b.c_.size() == 1) {
    CycloScalar r = a;
    for (auto& x : r.c_) x *= b.c_[0];
    r.trim();
    return r;
  }
  const CycloField* f = CycloScalar::common_field(a, b);
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
  }
  CycloScalar r;
  r.field_ = f;
  r.c_ = std::move(prod);
  reduce_mod(r.c_, f->cyclotomic_poly());
  r.trim();
  return r;
}

void CycloScalar::add_product(const CycloScalar& a, const CycloScalar& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (a.c_.size() == 1 && b.c_.size() == 1 && c_.size() <= 1) {
    Rational v = a.c_[0] * b.c_[0];
    if (c_.empty())
      c_.push_back(std::move(v));
    else
      c_[0] += v;
    trim();
    return;
  }
  *this += a * b;
}

CycloScalar CycloScalar::inverse() const {
  if (c_.empty()) throw std::domain_error("CycloScalar: division by zero");
  if (c_.size() == 1) return CycloScalar(Rational(1) / c_[0]);
  const CycloField& f = *field_;
  const auto n = static_cast<std::size_t>(f.degree());
  // Column j of m is this * zeta^j; solve m * x = e_0.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  CycloScalar col = *this;
  const CycloScalar zeta = f.zeta_pow(1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeff(i);
    col = col * zeta;
  }
  m[0][n] = Rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("CycloScalar::inverse: singular multiplication matrix");
    std::swap(m[piv], m[c]);
    const Rational inv = Rational(1) / m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational factor = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return CycloScalar(f, std::move(x));
}

std::string CycloScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& r = c_[k];
    if (r.is_zero()) continue;
    std::string coef = r.is_integer() ? r.to_mpq().get_num().get_str() : r.to_mpq().get_str();
    bool neg = r.sign() < 0;
    if (neg) coef.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (k == 0) {
      os << coef;
    } else {
      if (coef != "1") os << coef << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::vector<std::string> CycloScalar::to_strings(const CycloField& field) const {
  if (field_ && field_ != &field) throw std::invalid_argument("CycloScalar::to_strings: field mismatch");
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(field.degree()));
  for (std::size_t k = 0; k < static_cast<std::size_t>(field.degree()); ++k) out.push_back(coeff(k).str());
  return out;
}

CycloScalar CycloScalar::from_strings(const CycloField& field, const std::vector<std::string>& coords) {
  if (coords.size() != static_cast<std::size_t>(field.degree()))
    throw std::invalid_argument("CycloScalar::from_strings: expected " + std::to_string(field.degree()) + " coordinates");
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (const auto& s : coords) c.push_back(Rational::parse(s));
  return CycloScalar(field, std::move(c));
}

// --- QRoot ----------------------------------------------------------------

QRoot::QRoot(const CycloField& field, int exponent) : field_(&field), exponent_(exponent) {
  if (std::gcd(exponent, field.order()) != 1)
    throw std::invalid_argument("q exponent must be coprime to d");
}

CycloScalar QRoot::pow(long long k) const { return field_->zeta_pow(k * exponent_); }

CycloScalar QRoot::q_int(int i) const {
  if (i < 0) throw std::invalid_argument("q_int: negative argument");
  CycloScalar sum;
  for (int k = 0; k < i; ++k) sum += pow(2LL * k);
  return sum;
}

CycloScalar QRoot::q_factorial(int i) const {
  if (i < 0) throw std::invalid_argument("q_factorial: negative argument");
  CycloScalar f(1);
  for (int k = 2; k <= i; ++k) f = f * q_int(k);
  return f;
}

CycloScalar QRoot::q_binomial(int m, int r) const {
  if (r < 0 || r > m) throw std::invalid_argument("q_binomial: need 0 <= r <= m");
  if (m >= order()) throw std::invalid_argument("q_binomial: need m < d");
  // Row-by-row Pascal triangle: [m, r] = [m-1, r-1] + q^{2r} [m-1, r].
  std::vector<CycloScalar> row{CycloScalar(1)};
  for (int n = 1; n <= m; ++n) {
    std::vector<CycloScalar> next(static_cast<std::size_t>(n) + 1);
    next[0] = CycloScalar(1);
    next[static_cast<std::size_t>(n)] = CycloScalar(1);
    for (int k = 1; k < n; ++k)
      next[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k) - 1] + pow(2LL * k) * row[static_cast<std::size_t>(k)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

}  // namespace hopfoid
