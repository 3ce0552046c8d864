#include "jumploci/certificate.hpp"

#include <random>

#include "jumploci/errors.hpp"

namespace jumploci {

namespace {

IntVec clear_denominators(const std::vector<Rational>& v) {
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
  IntVec out;
  for (const auto& x : v) {
    mpz_class y = x.get_num() * (den / x.get_den());
    require(y.fits_slong_p(), ErrorCode::Overflow, "sublattice vector too large");
    out.push_back(y.get_si());
  }
  return out;
}

}  // namespace

TranslatedSubtorus subtorus_of(const std::vector<std::vector<Rational>>& k, std::size_t b,
                               const std::vector<Cyclo>& translate) {
  std::vector<IntVec> gens;
  for (const auto& v : k) {
    require(v.size() == b, ErrorCode::DimensionMismatch, "sublattice vector has wrong length");
    gens.push_back(clear_denominators(v));
  }
  TranslatedSubtorus s;
  s.translate = translate;
  std::vector<IntVec> basis;
  if (!gens.empty() && smith_normal_form(gens, b).rank > 0) basis = saturate(gens, b);
  s.dim = basis.size();
  s.embed.assign(b, IntVec(s.dim, 0));
  for (std::size_t a = 0; a < s.dim; ++a)
    for (std::size_t i = 0; i < b; ++i) s.embed[i][a] = basis[a][i];
  s.validate();
  return s;
}

bool point_on_subtorus(const TranslatedSubtorus& s, const std::vector<Cyclo>& p) {
  const std::size_t b = s.embed.size();
  require(p.size() == b, ErrorCode::DimensionMismatch, "point has wrong length");
  IntMatrix et(s.dim, IntVec(b, 0));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t a = 0; a < s.dim; ++a) et[a][i] = s.embed[i][a];
  std::vector<IntVec> chars;
  if (s.dim == 0) {
    for (std::size_t i = 0; i < b; ++i) {
      IntVec e(b, 0);
      e[i] = 1;
      chars.push_back(std::move(e));
    }
  } else {
    chars = integer_kernel(et, b);
  }
  for (const auto& m : chars) {
    Cyclo v(1);
    for (std::size_t i = 0; i < b; ++i)
      if (m[i] != 0) v *= (p[i] / s.translate[i]).pow(m[i]);
    if (!v.is_one()) return false;
  }
  return true;
}

CertificateReport verify_exp_hodge_certificate(const LocusUnion& l, const OneHodgeStructure& h,
                                               const std::vector<CertificateComponent>& cert, std::uint64_t seed,
                                               std::size_t samples) {
  const std::size_t b = l.nvars;
  require(h.rank == b, ErrorCode::DimensionMismatch, "Hodge structure rank differs from the torus dimension");
  validate_hodge(h);
  CertificateReport rep;
  rep.pass = true;
  for (const auto& c : cert) {
    require(c.translate.size() == b, ErrorCode::DimensionMismatch, "translate has wrong length");
    for (const auto& r : c.translate)
      require((r * r.conj()).is_one(), ErrorCode::Unsupported, "translate is not unitary");
    ComponentCheck chk;
    std::vector<Vec> rows;
    for (const auto& v : c.sublattice) {
      Vec row;
      for (const auto& x : v) row.emplace_back(x);
      rows.push_back(std::move(row));
    }
    chk.torus = subtorus_of(c.sublattice, b, c.translate);
    chk.sub_hodge = is_sub_hodge(h, Subspace::span(b, rows));
    chk.contained = subtorus_contained(l, chk.torus);
    rep.pass = rep.pass && chk.sub_hodge && chk.contained;
    rep.components.push_back(std::move(chk));
  }

  std::mt19937_64 rng(seed);
  static const unsigned orders[] = {1, 2, 3, 4, 6};
  rep.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Cyclo> p;
    for (std::size_t i = 0; i < b; ++i) {
      unsigned n = orders[rng() % 5];
      p.push_back(Cyclo::zeta(n, static_cast<long>(rng() % n)));
    }
    if (!locus_contains(l, CharacterPoint::algebraic(p))) continue;
    ++rep.samples_in_locus;
    for (const auto& c : rep.components)
      if (point_on_subtorus(c.torus, p)) {
        ++rep.samples_covered;
        break;
      }
  }
  return rep;
}

}  // namespace jumploci
