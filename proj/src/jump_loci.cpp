#include "jumploci/jump_loci.hpp"

#include <algorithm>
#include <numeric>

#include "jumploci/errors.hpp"

namespace jumploci {

void TranslatedSubtorus::validate() const {
  const std::size_t b = embed.size();
  require(translate.size() == b, ErrorCode::DimensionMismatch, "translate length differs from embedding rows");
  for (const auto& r : embed) require(r.size() == dim, ErrorCode::DimensionMismatch, "embedding matrix is ragged");
  for (const auto& t : translate) require(!t.is_zero(), ErrorCode::PreconditionFailed, "translate must lie in the torus");
  require(smith_normal_form(embed, dim).rank == dim, ErrorCode::PreconditionFailed,
          "embedding matrix must have full column rank");
}

namespace {

void append_unique(std::vector<LaurentPoly>& out, std::vector<LaurentPoly> more) {
  for (auto& f : more)
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
}

/// Minors of size s; sizes beyond the matrix give nothing (the bound is vacuous).
std::vector<LaurentPoly> minors_or_none(const RingMatrix& d, std::size_t s, std::size_t budget) {
  if (s > std::min(d.rows(), d.cols())) return {};
  return minors_ideal(d, s, budget);
}

}  // namespace

LocusUnion sigma_locus(const FreeComplex& k, std::size_t degree, std::size_t m, std::size_t minor_budget) {
  require(degree <= k.top_degree(), ErrorCode::PreconditionFailed, "degree outside the complex");
  require(m >= 1, ErrorCode::PreconditionFailed, "m must be at least 1");
  LocusUnion l;
  l.nvars = k.nvars();
  const std::size_t nk = k.ranks()[degree];
  if (nk < m) return l;
  const std::size_t total = nk - m;
  const RingMatrix* out = degree < k.differentials().size() ? &k.differential(degree) : nullptr;
  const RingMatrix* in = degree > 0 ? &k.differential(degree - 1) : nullptr;
  for (std::size_t a = 0; a <= total; ++a) {
    const std::size_t c = total - a;
    ClosedPiece piece;
    piece.split_a = a;
    piece.split_c = c;
    if (out) append_unique(piece.generators, minors_or_none(*out, a + 1, minor_budget));
    if (in) append_unique(piece.generators, minors_or_none(*in, c + 1, minor_budget));
    piece.whole_torus = piece.generators.empty();
    l.members.push_back(std::move(piece));
  }
  return l;
}

bool locus_contains(const LocusUnion& l, const CharacterPoint& p) {
  require(p.size() == l.nvars, ErrorCode::DimensionMismatch, "point does not match the number of variables");
  for (const auto& piece : l.members) {
    if (piece.whole_torus) return true;
    bool all = true;
    if (p.is_algebraic()) {
      const auto vals = p.algebraic_values();
      for (const auto& f : piece.generators)
        if (!evaluate(f, vals).is_zero()) {
          all = false;
          break;
        }
    } else {
      for (const auto& f : piece.generators)
        if (!evaluate(f, p).is_zero()) {
          all = false;
          break;
        }
    }
    if (all) return true;
  }
  return false;
}

bool subtorus_contained(const LocusUnion& l, const TranslatedSubtorus& s) {
  require(s.embed.size() == l.nvars, ErrorCode::DimensionMismatch, "subtorus does not match the number of variables");
  s.validate();
  std::vector<std::vector<long long>> e(s.embed.begin(), s.embed.end());
  for (const auto& piece : l.members) {
    if (piece.whole_torus) return true;
    bool all = true;
    for (const auto& f : piece.generators)
      if (!identically_zero(substitute_monomial_map(f, s.translate, e, s.dim))) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

ExpLineClosure closure_of_exp_line(const std::vector<Rational>& v) {
  require(std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; }), ErrorCode::ZeroVector,
          "direction vector is zero");
  const std::size_t b = v.size();
  // clear denominators, divide by the content
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpz_class> w;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class y = x.get_num() * (den / x.get_den());
    g = gcd(g, y);
    w.push_back(y);
  }
  IntVec dir;
  for (auto& y : w) {
    y /= g;
    require(y.fits_slong_p(), ErrorCode::Overflow, "direction vector too large");
    dir.push_back(y.get_si());
  }
  ExpLineClosure r;
  r.kernel_lattice = integer_kernel({dir}, b);
  r.torus.dim = 1;
  for (auto x : dir) r.torus.embed.push_back({x});
  r.torus.translate.assign(b, Cyclo(1));
  return r;
}

}  // namespace jumploci
