#include "jumploci/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "jumploci/errors.hpp"

namespace jumploci {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    raise(ErrorCode::SchemaError, "not a rational number: '" + text + "'");
  if (q.get_den() == 0) raise(ErrorCode::SchemaError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

/// Per-conductor tables: the cyclotomic polynomial and z^k mod Phi_n for 0 <= k < n.
struct FieldTables {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<long> poly;
  std::vector<std::vector<long>> power;
};

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

FieldTables build_tables(unsigned n) {
  FieldTables t;
  t.n = n;
  t.phi = euler_phi(n);
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
  t.poly = num;
  t.power.assign(n, std::vector<long>(t.phi, 0));
  std::vector<long> cur(t.phi, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    t.power[k] = cur;
    // multiply by x and reduce
    long top = cur[t.phi - 1];
    for (unsigned j = t.phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned j = 0; j < t.phi; ++j) cur[j] -= top * t.poly[j];
  }
  return t;
}

const FieldTables& tables(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<FieldTables>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  // build_tables recurses into cyclotomic_polynomial for divisors; build unlocked.
  auto built = std::make_unique<FieldTables>(build_tables(n));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return *it->second;
}

/// Reduces a polynomial in z (any length) modulo Phi_n in place and truncates to phi(n).
void reduce_mod(std::vector<Rational>& p, const FieldTables& t) {
  const unsigned phi = t.phi;
  if (p.size() > t.n) {
    // z^n = 1
    for (std::size_t k = t.n; k < p.size(); ++k) p[k % t.n] += p[k];
    p.resize(t.n);
  }
  for (std::size_t k = p.size(); k-- > phi;) {
    if (sgn(p[k]) == 0) continue;
    Rational c = p[k];
    for (unsigned j = 0; j < phi; ++j) {
      long pj = t.poly[j];
      if (pj != 0) p[k - phi + j] -= c * pj;
    }
    p[k] = 0;
  }
  p.resize(phi);
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  require(n >= 1, ErrorCode::DimensionMismatch, "conductor must be positive");
  return tables(n).poly;
}

CyclotomicNumber::CyclotomicNumber(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  require(conductor_ >= 1, ErrorCode::DimensionMismatch, "conductor must be positive");
  if (coeffs_.empty()) coeffs_.resize(1);
  reduce_mod(coeffs_, tables(conductor_));
  normalize();
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned n, long power) {
  require(n >= 1, ErrorCode::DimensionMismatch, "conductor must be positive");
  long k = power % static_cast<long>(n);
  if (k < 0) k += n;
  const FieldTables& t = tables(n);
  std::vector<Rational> c(t.phi);
  for (unsigned j = 0; j < t.phi; ++j) c[j] = t.power[k][j];
  CyclotomicNumber z;
  z.conductor_ = n;
  z.coeffs_ = std::move(c);
  z.normalize();
  return z;
}

void CyclotomicNumber::normalize() {
  if (conductor_ != 1) {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      if (sgn(coeffs_[j]) != 0) return;
    coeffs_.resize(1);
    conductor_ = 1;
  }
  if (!coeffs_.empty() && sgn(coeffs_[0]) == 0) coeffs_.clear();
}

const Rational& CyclotomicNumber::rational_value() const {
  static const Rational zero;
  return coeffs_.empty() ? zero : coeffs_[0];
}

bool CyclotomicNumber::is_one() const { return conductor_ == 1 && !coeffs_.empty() && coeffs_[0] == 1; }

CyclotomicNumber CyclotomicNumber::lifted(unsigned m) const {
  require(m % conductor_ == 0, ErrorCode::DimensionMismatch, "lift target must be a multiple of the conductor");
  if (m == conductor_) return *this;
  const FieldTables& t = tables(m);
  const unsigned step = m / conductor_;
  CyclotomicNumber r;
  r.conductor_ = m;
  r.coeffs_.assign(t.phi, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const auto& row = t.power[(k * step) % m];
    for (unsigned j = 0; j < t.phi; ++j)
      if (row[j] != 0) r.coeffs_[j] += coeffs_[k] * row[j];
  }
  return r;  // not normalized on purpose: caller works at conductor m
}

CyclotomicNumber CyclotomicNumber::conj() const {
  if (conductor_ <= 2) return *this;
  const FieldTables& t = tables(conductor_);
  CyclotomicNumber r;
  r.conductor_ = conductor_;
  r.coeffs_.assign(t.phi, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const auto& row = t.power[(conductor_ - k) % conductor_];
    for (unsigned j = 0; j < t.phi; ++j)
      if (row[j] != 0) r.coeffs_[j] += coeffs_[k] * row[j];
  }
  r.normalize();
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = o;
  if (conductor_ == o.conductor_) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  } else if (o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  } else {
    unsigned m = lcm_u(conductor_, o.conductor_);
    *this = lifted(m);
    CyclotomicNumber b = o.lifted(m);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += b.coeffs_[j];
  }
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = -o;
  if (conductor_ == o.conductor_) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  } else if (o.conductor_ == 1) {
    coeffs_[0] -= o.coeffs_[0];
    return *this;
  } else {
    unsigned m = lcm_u(conductor_, o.conductor_);
    *this = lifted(m);
    CyclotomicNumber b = o.lifted(m);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= b.coeffs_[j];
  }
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (coeffs_.empty()) return *this;
  if (o.coeffs_.empty()) {
    conductor_ = 1;
    coeffs_.clear();
    return *this;
  }
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational s = std::move(coeffs_[0]);
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  unsigned m = lcm_u(conductor_, o.conductor_);
  // lift only the operands that need it
  CyclotomicNumber la, lb;
  if (conductor_ != m) la = lifted(m);
  if (o.conductor_ != m) lb = o.lifted(m);
  const std::vector<Rational>& a = conductor_ == m ? coeffs_ : la.coeffs_;
  const std::vector<Rational>& b = o.conductor_ == m ? o.coeffs_ : lb.coeffs_;
  const FieldTables& t = tables(m);
  std::vector<Rational> prod(2 * t.phi - 1);
  thread_local Rational term;
  for (unsigned i = 0; i < t.phi; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (unsigned j = 0; j < t.phi; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      prod[i + j] += term;
    }
  }
  reduce_mod(prod, t);
  conductor_ = m;
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::accumulate(const CyclotomicNumber& a, const CyclotomicNumber& b, bool subtract) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return *this;
  if (coeffs_.empty()) {
    *this = a * b;
    if (subtract)
      for (auto& c : coeffs_) c = -c;
    return *this;
  }
  // rational factor times an element at this conductor: one product per coordinate
  const CyclotomicNumber* r = a.conductor_ == 1 ? &a : b.conductor_ == 1 ? &b : nullptr;
  const CyclotomicNumber& other = r == &a ? b : a;
  if (r && !coeffs_.empty() && other.conductor_ == conductor_) {
    thread_local Rational t;
    const Rational& s = r->coeffs_[0];
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (sgn(other.coeffs_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), s.get_mpq_t(), other.coeffs_[j].get_mpq_t());
      if (subtract)
        coeffs_[j] -= t;
      else
        coeffs_[j] += t;
    }
    normalize();
    return *this;
  }
  return subtract ? *this -= a * b : *this += a * b;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero");
  if (conductor_ == 1) return CyclotomicNumber(Rational(1) / coeffs_[0]);
  // Solve (multiplication-by-this matrix) * x = e_0 over Q. Column k holds this * z^k.
  const FieldTables& t = tables(conductor_);
  const unsigned n = t.phi;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  std::vector<Rational> col = coeffs_;
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned row = 0; row < n; ++row) a[row][k] = col[row];
    // multiply by z and reduce
    Rational top = std::move(col[n - 1]);
    for (unsigned j = n - 1; j > 0; --j) col[j] = std::move(col[j - 1]);
    col[0] = 0;
    if (sgn(top) != 0)
      for (unsigned j = 0; j < n; ++j)
        if (t.poly[j] != 0) col[j] -= top * t.poly[j];
  }
  a[0][n] = 1;
  thread_local Rational term;
  for (unsigned c = 0; c < n; ++c) {
    unsigned p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    require(p < n, ErrorCode::InvariantViolation, "singular multiplication matrix in cyclotomic inverse");
    std::swap(a[p], a[c]);
    Rational inv = Rational(1) / a[c][c];
    for (unsigned j = c; j <= n; ++j) a[c][j] *= inv;
    for (unsigned r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (unsigned j = c; j <= n; ++j) {
        if (sgn(a[c][j]) == 0) continue;
        mpq_mul(term.get_mpq_t(), f.get_mpq_t(), a[c][j].get_mpq_t());
        a[r][j] -= term;
      }
    }
  }
  std::vector<Rational> x(n);
  for (unsigned r = 0; r < n; ++r) x[r] = a[r][n];
  return CyclotomicNumber(conductor_, std::move(x));
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  require(!o.is_zero(), ErrorCode::DivisionByZero, "division by zero");
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c /= o.coeffs_[0];
    return *this;
  }
  return *this *= o.inverse();
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(1), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  unsigned m = lcm_u(a.conductor_, b.conductor_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string CyclotomicNumber::to_string() const {
  if (conductor_ == 1) return format_rational(rational_value());
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << format_rational(mag);
      continue;
    }
    if (mag != 1) os << format_rational(mag) << "*";
    os << "z" << conductor_;
    if (k > 1) os << "^" << k;
  }
  return first ? "0" : os.str();
}

}  // namespace jumploci
