#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jumploci {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// Exact element of Q(zeta_N), stored in the power basis 1, z, ..., z^(phi(N)-1)
/// and always reduced modulo the N-th cyclotomic polynomial. Elements whose
/// irrational coordinates vanish are stored at conductor 1, and zero has no
/// coefficients at all, so zero matrices cost no allocation.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(long value) {  // NOLINT
    if (value != 0) coeffs_.emplace_back(value);
  }
  CyclotomicNumber(const Rational& value) {  // NOLINT
    if (sgn(value) != 0) coeffs_.push_back(value);
  }
  /// Takes coefficients of z^0..z^(k-1) for any k; higher powers are reduced.
  CyclotomicNumber(unsigned conductor, std::vector<Rational> coeffs);

  /// z_n^power for any integer power.
  static CyclotomicNumber zeta(unsigned n, long power = 1);

  unsigned conductor() const { return conductor_; }
  /// Power-basis coordinates; empty for zero.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }
  const Rational& rational_value() const;

  /// Same number written in Q(zeta_m); m must be a multiple of the conductor.
  CyclotomicNumber lifted(unsigned m) const;

  /// Complex conjugate (z -> z^-1).
  CyclotomicNumber conj() const;
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  /// this += a * b and this -= a * b, without temporaries in the common cases.
  CyclotomicNumber& add_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return accumulate(a, b, false); }
  CyclotomicNumber& sub_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return accumulate(a, b, true); }

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  CyclotomicNumber operator-() const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  /// e.g. "1/2 - z8^3"
  std::string to_string() const;

 private:
  void normalize();
  CyclotomicNumber& accumulate(const CyclotomicNumber& a, const CyclotomicNumber& b, bool subtract);

  unsigned conductor_ = 1;
  std::vector<Rational> coeffs_;
};

using Cyclo = CyclotomicNumber;

}  // namespace jumploci
