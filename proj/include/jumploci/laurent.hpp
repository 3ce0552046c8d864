#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "jumploci/cyclotomic.hpp"

namespace jumploci {

using Exponent = std::vector<int>;

/// Multivariate Laurent polynomial in t_1..t_b over a cyclotomic field.
/// Terms are kept in a lexicographically ordered map with no zero
/// coefficients, so equality is structural.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Cyclo>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static LaurentPoly constant(std::size_t nvars, const Cyclo& c);
  static LaurentPoly monomial(std::size_t nvars, Exponent e, const Cyclo& c = Cyclo(1));
  /// t_i (0-based index).
  static LaurentPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant times a monomial.
  bool is_unit() const { return terms_.size() == 1; }

  void add_term(const Exponent& e, const Cyclo& c);

  /// Lex-largest / lex-smallest term.
  const TermMap::value_type& leading() const { return *terms_.rbegin(); }
  const TermMap::value_type& trailing() const { return *terms_.begin(); }
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  LaurentPoly times_monomial(const Exponent& e, const Cyclo& c = Cyclo(1)) const;
  /// Quotient f / g when g divides f in the Laurent ring; raises NotDivisible otherwise.
  LaurentPoly divide_exact(const LaurentPoly& g) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Cyclo& c) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Human-readable form in variables t1..tb, e.g. "t1^2 - t1 + 1".
  std::string to_string() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// True iff the canonical form has no terms.
bool identically_zero(const LaurentPoly& f);

/// Marker for an independent transcendental coordinate.
struct Generic {
  std::size_t index = 0;
  friend bool operator==(const Generic& a, const Generic& b) { return a.index == b.index; }
};

using Coordinate = std::variant<Cyclo, Generic>;

/// A point of the torus (C*)^b; some coordinates may be GENERIC.
class CharacterPoint {
 public:
  CharacterPoint() = default;
  explicit CharacterPoint(std::vector<Coordinate> values);
  /// All-algebraic point.
  static CharacterPoint algebraic(std::vector<Cyclo> values);
  /// Every coordinate GENERIC(i).
  static CharacterPoint generic(std::size_t b);
  /// The trivial character (1, ..., 1).
  static CharacterPoint trivial(std::size_t b);

  std::size_t size() const { return values_.size(); }
  const std::vector<Coordinate>& values() const { return values_; }
  bool is_algebraic() const;
  std::size_t num_generic() const;
  /// Algebraic coordinates; raises PreconditionFailed if any is generic.
  std::vector<Cyclo> algebraic_values() const;

  friend bool operator==(const CharacterPoint& a, const CharacterPoint& b) { return a.values_ == b.values_; }

 private:
  std::vector<Coordinate> values_;
};

/// f(p) for an all-algebraic point.
Cyclo evaluate(const LaurentPoly& f, const std::vector<Cyclo>& point);
/// Substitutes the algebraic coordinates of p; the result is a Laurent
/// polynomial in the generic coordinates (ordered by their GENERIC index).
LaurentPoly evaluate(const LaurentPoly& f, const CharacterPoint& p);
/// f(rho_1 s^{E_1}, ..., rho_b s^{E_b}) as a polynomial in s_1..s_c, where
/// E is b x c (row i gives the exponents of t_i).
LaurentPoly substitute_monomial_map(const LaurentPoly& f, const std::vector<Cyclo>& translate,
                                    const std::vector<std::vector<long long>>& embed, std::size_t c);

}  // namespace jumploci

namespace jumploci {

/// Monic gcd of one-variable Laurent polynomials, normalized to lowest exponent 0
/// (so it is defined up to units). gcd(0, 0) = 0.
LaurentPoly univariate_gcd(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace jumploci
