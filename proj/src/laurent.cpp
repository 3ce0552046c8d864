#include "jumploci/laurent.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "jumploci/errors.hpp"

namespace jumploci {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Cyclo& c) {
  return monomial(nvars, Exponent(nvars, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, Exponent e, const Cyclo& c) {
  require(e.size() == nvars, ErrorCode::DimensionMismatch, "exponent length mismatch");
  LaurentPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  require(i < nvars, ErrorCode::DimensionMismatch, "variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, std::move(e));
}

void LaurentPoly::add_term(const Exponent& e, const Cyclo& c) {
  require(e.size() == nvars_, ErrorCode::DimensionMismatch, "exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Exponent LaurentPoly::min_exponents() const {
  Exponent lo(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) lo[i] = first ? e[i] : std::min(lo[i], e[i]);
    first = false;
  }
  return lo;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent hi(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) hi[i] = first ? e[i] : std::max(hi[i], e[i]);
    first = false;
  }
  return hi;
}

LaurentPoly LaurentPoly::times_monomial(const Exponent& shift, const Cyclo& c) const {
  require(shift.size() == nvars_, ErrorCode::DimensionMismatch, "exponent length mismatch");
  LaurentPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, coeff] : terms_) {
    Exponent ne(e);
    for (std::size_t i = 0; i < nvars_; ++i) ne[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(ne), coeff * c);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require(nvars_ == o.nvars_, ErrorCode::DimensionMismatch, "Laurent polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require(nvars_ == o.nvars_, ErrorCode::DimensionMismatch, "Laurent polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require(a.nvars_ == b.nvars_, ErrorCode::DimensionMismatch, "Laurent polynomials in different rings");
  LaurentPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Cyclo& s) const {
  LaurentPoly r(nvars_);
  if (s.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& g) const {
  require(nvars_ == g.nvars_, ErrorCode::DimensionMismatch, "Laurent polynomials in different rings");
  require(!g.is_zero(), ErrorCode::DivisionByZero, "division by the zero polynomial");
  LaurentPoly q(nvars_);
  if (is_zero()) return q;
  // Newton polytopes add under multiplication, so the quotient's exponents
  // live in the box [min f - min g, max f - max g].
  Exponent lo = min_exponents(), hi = max_exponents();
  Exponent glo = g.min_exponents(), ghi = g.max_exponents();
  for (std::size_t i = 0; i < nvars_; ++i) {
    lo[i] -= glo[i];
    hi[i] -= ghi[i];
    if (lo[i] > hi[i]) raise(ErrorCode::NotDivisible, "Newton box of quotient is empty");
  }
  LaurentPoly r(*this);
  const auto& [gexp, gcoeff] = g.leading();
  Exponent e(nvars_);
  while (!r.is_zero()) {
    const auto& [rexp, rcoeff] = r.leading();
    for (std::size_t i = 0; i < nvars_; ++i) {
      e[i] = rexp[i] - gexp[i];
      if (e[i] < lo[i] || e[i] > hi[i]) raise(ErrorCode::NotDivisible, "remainder term outside quotient box");
    }
    Cyclo c = rcoeff / gcoeff;
    q.add_term(e, c);
    r -= g.times_monomial(e, c);
  }
  return q;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    std::string cs;
    bool negative = false;
    if (c.is_rational()) {
      Rational v = c.rational_value();
      negative = sgn(v) < 0;
      Rational mag = abs(v);
      if (mag != 1 || is_const) cs = format_rational(mag);
    } else {
      cs = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << cs;
    bool need_star = !cs.empty();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "t" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

bool identically_zero(const LaurentPoly& f) { return f.is_zero(); }

// ---------------------------------------------------------------------------

CharacterPoint::CharacterPoint(std::vector<Coordinate> values) : values_(std::move(values)) {
  std::set<std::size_t> seen;
  for (const auto& v : values_) {
    if (const auto* c = std::get_if<Cyclo>(&v)) {
      require(!c->is_zero(), ErrorCode::PreconditionFailed, "character coordinates must be nonzero");
    } else {
      auto idx = std::get<Generic>(v).index;
      require(seen.insert(idx).second, ErrorCode::PreconditionFailed, "GENERIC indices must be distinct");
    }
  }
}

CharacterPoint CharacterPoint::algebraic(std::vector<Cyclo> values) {
  std::vector<Coordinate> v(values.begin(), values.end());
  return CharacterPoint(std::move(v));
}

CharacterPoint CharacterPoint::generic(std::size_t b) {
  std::vector<Coordinate> v;
  for (std::size_t i = 0; i < b; ++i) v.emplace_back(Generic{i});
  return CharacterPoint(std::move(v));
}

CharacterPoint CharacterPoint::trivial(std::size_t b) { return algebraic(std::vector<Cyclo>(b, Cyclo(1))); }

bool CharacterPoint::is_algebraic() const { return num_generic() == 0; }

std::size_t CharacterPoint::num_generic() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const Coordinate& c) { return std::holds_alternative<Generic>(c); }));
}

std::vector<Cyclo> CharacterPoint::algebraic_values() const {
  std::vector<Cyclo> out;
  for (const auto& v : values_) {
    const auto* c = std::get_if<Cyclo>(&v);
    require(c != nullptr, ErrorCode::PreconditionFailed, "point has GENERIC coordinates");
    out.push_back(*c);
  }
  return out;
}

namespace {

/// Memoized powers of one base value.
class PowerCache {
 public:
  explicit PowerCache(const Cyclo& base) : base_(base) {}
  const Cyclo& get(int e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(e, base_.pow(e)).first->second;
  }

 private:
  Cyclo base_;
  std::unordered_map<int, Cyclo> cache_;
};

}  // namespace

Cyclo evaluate(const LaurentPoly& f, const std::vector<Cyclo>& point) {
  require(point.size() == f.nvars(), ErrorCode::DimensionMismatch, "point has wrong number of coordinates");
  std::vector<PowerCache> powers;
  powers.reserve(point.size());
  for (const auto& v : point) {
    require(!v.is_zero(), ErrorCode::PreconditionFailed, "character coordinates must be nonzero");
    powers.emplace_back(v);
  }
  Cyclo sum;
  for (const auto& [e, c] : f.terms()) {
    Cyclo term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= powers[i].get(e[i]);
    sum += term;
  }
  return sum;
}

LaurentPoly evaluate(const LaurentPoly& f, const CharacterPoint& p) {
  require(p.size() == f.nvars(), ErrorCode::DimensionMismatch, "point has wrong number of coordinates");
  // generic coordinates become variables ordered by GENERIC index
  std::vector<std::pair<std::size_t, std::size_t>> gen;  // (index, coordinate position)
  for (std::size_t i = 0; i < p.size(); ++i)
    if (const auto* g = std::get_if<Generic>(&p.values()[i])) gen.emplace_back(g->index, i);
  std::sort(gen.begin(), gen.end());
  std::vector<int> slot(p.size(), -1);
  for (std::size_t k = 0; k < gen.size(); ++k) slot[gen[k].second] = static_cast<int>(k);

  std::vector<std::optional<PowerCache>> powers(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (const auto* c = std::get_if<Cyclo>(&p.values()[i])) powers[i].emplace(*c);

  LaurentPoly r(gen.size());
  Exponent ne(gen.size());
  for (const auto& [e, c] : f.terms()) {
    Cyclo term = c;
    std::fill(ne.begin(), ne.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (slot[i] >= 0)
        ne[slot[i]] = e[i];
      else
        term *= powers[i]->get(e[i]);
    }
    r.add_term(ne, term);
  }
  return r;
}

LaurentPoly substitute_monomial_map(const LaurentPoly& f, const std::vector<Cyclo>& translate,
                                    const std::vector<std::vector<long long>>& embed, std::size_t c) {
  const std::size_t b = f.nvars();
  require(translate.size() == b && embed.size() == b, ErrorCode::DimensionMismatch,
          "subtorus data does not match the number of variables");
  std::vector<PowerCache> powers;
  for (std::size_t i = 0; i < b; ++i) {
    require(embed[i].size() == c, ErrorCode::DimensionMismatch, "embedding matrix has wrong width");
    powers.emplace_back(translate[i]);
  }
  LaurentPoly r(c);
  Exponent ne(c);
  for (const auto& [e, coeff] : f.terms()) {
    Cyclo term = coeff;
    std::fill(ne.begin(), ne.end(), 0);
    for (std::size_t i = 0; i < b; ++i) {
      if (e[i] == 0) continue;
      term *= powers[i].get(e[i]);
      for (std::size_t a = 0; a < c; ++a) ne[a] += static_cast<int>(e[i] * embed[i][a]);
    }
    r.add_term(ne, term);
  }
  return r;
}

}  // namespace jumploci

namespace jumploci {

namespace {

using UPoly = std::vector<Cyclo>;  // low degree first

UPoly to_upoly(const LaurentPoly& f) {
  if (f.is_zero()) return {};
  const int lo = f.min_exponents()[0];
  const int hi = f.max_exponents()[0];
  UPoly p(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e[0] - lo)] = c;
  return p;
}

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Cyclo q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

LaurentPoly univariate_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  require(f.nvars() == 1 && g.nvars() == 1, ErrorCode::DimensionMismatch, "univariate gcd needs one variable");
  UPoly a = to_upoly(f), b = to_upoly(g);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  LaurentPoly out(1);
  if (a.empty()) return out;
  // strip powers of t (units) and make monic
  std::size_t lo = 0;
  while (a[lo].is_zero()) ++lo;
  const Cyclo lead = a.back();
  for (std::size_t i = lo; i < a.size(); ++i) out.add_term({static_cast<int>(i - lo)}, a[i] / lead);
  return out;
}

}  // namespace jumploci
