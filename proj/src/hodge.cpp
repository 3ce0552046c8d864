#include "jumploci/hodge.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

namespace {

const Cyclo& imag_unit() {
  static const Cyclo i = Cyclo::zeta(4);
  return i;
}

Vec conj_vec(const Vec& v) {
  Vec c(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) c[k] = v[k].conj();
  return c;
}

Vec scale(const Cyclo& s, const Vec& v) {
  Vec c(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) c[k] = s * v[k];
  return c;
}

Vec add(const Vec& a, const Vec& b) {
  Vec c(a);
  for (std::size_t k = 0; k < a.size(); ++k) c[k] += b[k];
  return c;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec c(a);
  for (std::size_t k = 0; k < a.size(); ++k) c[k] -= b[k];
  return c;
}

std::vector<Vec> rows_of(const Subspace& s) { return s.basis().row_data(); }

/// Coordinates of v in the basis rows of s (v must lie in s).
Vec coords_in(const Subspace& s, const Vec& v) {
  auto x = solve(s.basis().transposed(), v);
  require(x.has_value(), ErrorCode::InvariantViolation, "vector outside the expected subspace");
  return *x;
}

/// Component of w (in h10 + h01) along h10.
Vec h10_component(const HodgePieces& p, const Vec& w) {
  std::vector<Vec> basis = rows_of(p.h10);
  for (const auto& r : rows_of(p.h01)) basis.push_back(r);
  Matrix b = Matrix::from_rows(w.size(), basis);
  auto y = solve(b.transposed(), w);
  require(y.has_value(), ErrorCode::InvariantViolation, "vector outside W_C");
  Vec h(w.size());
  for (std::size_t k = 0; k < p.h10.dim(); ++k) h = add(h, scale((*y)[k], basis[k]));
  return h;
}

Vec apply_j(const HodgePieces& p, const Vec& w) {
  Vec h = h10_component(p, w);
  return scale(imag_unit(), sub(h, conj_vec(h)));
}

}  // namespace

Subspace conj(const Subspace& s) {
  std::vector<Vec> rows;
  for (const auto& r : rows_of(s)) rows.push_back(conj_vec(r));
  return Subspace::span(s.ambient(), rows);
}

bool is_real_vector(const Vec& v) { return conj_vec(v) == v; }

bool is_rational_vector(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_rational()) return false;
  return true;
}

HodgePieces validate_hodge(const OneHodgeStructure& h) {
  const std::size_t n = h.rank;
  require(h.w.ambient() == n && h.f.ambient() == n, ErrorCode::DimensionMismatch, "subspaces must live in C^n");
  for (const auto& r : rows_of(h.w))
    require(is_rational_vector(r), ErrorCode::PreconditionFailed, "W must be rationally defined");
  Subspace fbar = conj(h.f);
  HodgePieces p{intersect(h.f, h.w), intersect(fbar, h.w), intersect(h.f, fbar)};
  require(p.h10.dim() + p.h01.dim() == h.w.dim() && (p.h10 + p.h01).dim() == h.w.dim(), ErrorCode::NotOpposed,
          "W_C != (W_C cap F) + (W_C cap conj F) as a direct sum");
  require((h.w + h.f).dim() == n, ErrorCode::NotOpposed, "W_C + F != C^n");
  require(p.h10.dim() + p.h01.dim() + p.h11.dim() == n && (p.h10 + p.h01 + p.h11).dim() == n, ErrorCode::NotOpposed,
          "C^n != H01 + H10 + H11 as a direct sum");
  return p;
}

HodgeBigrading to_bigrading(const OneHodgeStructure& h) { return {h.w, validate_hodge(h)}; }

HodgeComplexStructure to_complex_structure(const HodgeBigrading& b) {
  const auto& p = b.pieces;
  require(conj(p.h01) == p.h10 && conj(p.h11) == p.h11, ErrorCode::NotOpposed, "bigrading is not conjugation-symmetric");
  require(p.h10 + p.h01 == b.w, ErrorCode::NotOpposed, "W_C != H01 + H10");
  HodgeComplexStructure c;
  c.w = b.w;
  const std::size_t d = b.w.dim();
  c.j = Matrix(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    Vec jw = apply_j(p, b.w.basis().row(col));
    require(is_real_vector(jw), ErrorCode::InvariantViolation, "J does not preserve W_R");
    Vec x = coords_in(b.w, jw);
    for (std::size_t r = 0; r < d; ++r) c.j(r, col) = x[r];
  }
  require(c.j * c.j == Cyclo(-1) * Matrix::identity(d), ErrorCode::InvariantViolation, "J^2 != -1");
  const Cyclo half(Rational(1, 2));
  for (const auto& v : rows_of(p.h11)) {
    Vec vb = conj_vec(v);
    c.h11_real.push_back(scale(half, add(v, vb)));
    c.h11_real.push_back(scale(half * imag_unit().conj(), sub(v, vb)));
  }
  return c;
}

OneHodgeStructure from_complex_structure(const HodgeComplexStructure& c) {
  const std::size_t n = c.w.ambient();
  const std::size_t d = c.w.dim();
  require(c.j.rows() == d && c.j.cols() == d, ErrorCode::DimensionMismatch, "J has wrong shape");
  require(c.j * c.j == Cyclo(-1) * Matrix::identity(d), ErrorCode::PreconditionFailed, "J^2 != -1");
  std::vector<Vec> f;
  for (std::size_t col = 0; col < d; ++col) {
    Vec jw(n);
    for (std::size_t r = 0; r < d; ++r) jw = add(jw, scale(c.j(r, col), c.w.basis().row(r)));
    f.push_back(sub(c.w.basis().row(col), scale(imag_unit(), jw)));
  }
  for (const auto& v : c.h11_real) {
    require(is_real_vector(v), ErrorCode::PreconditionFailed, "H11_R must be spanned by real vectors");
    f.push_back(v);
  }
  return {n, c.w, Subspace::span(n, f)};
}

RoundTrip roundtrip_formats(const OneHodgeStructure& h) {
  RoundTrip r;
  r.bigrading = to_bigrading(h);
  r.complex_structure = to_complex_structure(r.bigrading);
  r.reconstructed = from_complex_structure(r.complex_structure);
  r.fixpoint = r.reconstructed.w == h.w && r.reconstructed.f.contains(h.f) && h.f.contains(r.reconstructed.f);
  return r;
}

OneHodgeStructure restrict_to(const OneHodgeStructure& h, const Subspace& k) {
  const std::size_t n = h.rank;
  require(k.ambient() == n, ErrorCode::DimensionMismatch, "subspace must live in Q^n");
  auto to_coords = [&](const Subspace& s) {
    std::vector<Vec> rows;
    for (const auto& r : rows_of(s)) rows.push_back(coords_in(k, r));
    return Subspace::span(k.dim(), rows);
  };
  return {k.dim(), to_coords(intersect(h.w, k)), to_coords(intersect(h.f, k))};
}

bool is_sub_hodge(const OneHodgeStructure& h, const Subspace& k) {
  for (const auto& r : rows_of(k))
    require(is_rational_vector(r), ErrorCode::PreconditionFailed, "K must be rationally defined");
  HodgePieces p = validate_hodge(h);
  Subspace wk = intersect(h.w, k);
  bool stable = true;
  for (const auto& v : rows_of(wk))
    if (!wk.contains(apply_j(p, v))) {
      stable = false;
      break;
    }
  // H11_R cap K_R has the complexification H11 cap K_C (both sides are conjugation-stable)
  const bool criterion = stable && (wk + intersect(p.h11, k)) == k;

  bool restricted_valid = true;
  try {
    validate_hodge(restrict_to(h, k));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotOpposed) throw;
    restricted_valid = false;
  }
  require(criterion == restricted_valid, ErrorCode::InvariantViolation,
          "sub-structure criterion disagrees with validation of the restriction");
  return criterion;
}

TorusPresentation jacobian_torus(const OneHodgeStructure& h) {
  HodgePieces p = validate_hodge(h);
  TorusPresentation t;
  t.dim = h.f.dim();
  t.periods = h.f.basis().transposed();
  t.complex_rank = rank(t.periods);
  std::vector<Vec> real_rows;
  for (const auto& r : t.periods.row_data()) real_rows.push_back(realify(r));
  t.real_rank = Subspace::span(2 * t.dim, real_rows).dim();
  t.compact_dim = p.h10.dim();
  t.affine_dim = p.h11.dim();
  require(t.complex_rank == t.dim, ErrorCode::NotOpposed, "dual lattice does not span F^*");
  require(t.real_rank == h.rank, ErrorCode::NotOpposed, "dual lattice is not discrete in F^*");
  require(t.compact_dim + t.affine_dim == t.dim, ErrorCode::NotOpposed, "F != H10 + H11");
  return t;
}

Vec realify(const Vec& v) {
  const std::size_t n = v.size();
  Vec r(2 * n);
  const Cyclo half(Rational(1, 2));
  const Cyclo minus_half_i = half * imag_unit().conj();
  for (std::size_t k = 0; k < n; ++k) {
    Cyclo c = v[k].conj();
    r[k] = half * (v[k] + c);
    r[n + k] = minus_half_i * (v[k] - c);
  }
  return r;
}

Subspace real_span(std::size_t n, const std::vector<Vec>& vectors) {
  std::vector<Vec> rows;
  for (const auto& v : vectors) {
    require(v.size() == n, ErrorCode::DimensionMismatch, "vector length mismatch");
    rows.push_back(realify(v));
  }
  return Subspace::span(2 * n, rows);
}

Subspace realified(const Subspace& s) {
  std::vector<Vec> v;
  for (const auto& r : rows_of(s)) {
    v.push_back(r);
    v.push_back(scale(imag_unit(), r));
  }
  return real_span(s.ambient(), v);
}

std::size_t AdmissibleDecomposition::dim_r1() const { return real_span(n, r1).dim(); }
std::size_t AdmissibleDecomposition::dim_r2() const { return real_span(n, r2).dim(); }
std::size_t AdmissibleDecomposition::dim_r3() const { return real_span(n, r3).dim(); }

AdmissibilityReport check_admissible(const AdmissibleDecomposition& d) {
  const std::size_t n = d.n;
  AdmissibilityReport rep;
  const std::size_t d1 = d.dim_r1(), d2 = d.dim_r2(), d3 = d.dim_r3();
  std::vector<Vec> all = d.r1;
  all.insert(all.end(), d.r2.begin(), d.r2.end());
  all.insert(all.end(), d.r3.begin(), d.r3.end());
  rep.direct_sum = d1 + d2 + d3 == 2 * n && real_span(n, all).dim() == 2 * n;

  std::vector<Vec> r1bar, ir2, ir3;
  for (const auto& v : d.r1) r1bar.push_back(conj_vec(v));
  for (const auto& v : d.r2) ir2.push_back(scale(imag_unit(), v));
  for (const auto& v : d.r3) ir3.push_back(scale(imag_unit(), v));
  std::vector<Vec> doubled = d.r1;
  doubled.insert(doubled.end(), r1bar.begin(), r1bar.end());
  doubled.insert(doubled.end(), d.r2.begin(), d.r2.end());
  doubled.insert(doubled.end(), ir2.begin(), ir2.end());
  rep.doubled_direct_sum = d1 + real_span(n, r1bar).dim() + d2 + real_span(n, ir2).dim() == 2 * n &&
                           real_span(n, doubled).dim() == 2 * n;

  std::vector<Vec> r3both = d.r3;
  r3both.insert(r3both.end(), ir3.begin(), ir3.end());
  rep.r3_totally_real = real_span(n, r3both).dim() == 2 * d3;
  rep.dimensions = d1 + d2 == n && d3 == n;
  return rep;
}

AdmissibleDecomposition standard_admissible(const OneHodgeStructure& h) {
  HodgePieces p = validate_hodge(h);
  AdmissibleDecomposition d;
  d.n = h.rank;
  for (const auto& v : rows_of(p.h10)) {
    d.r1.push_back(v);
    d.r1.push_back(scale(imag_unit(), v));
  }
  d.r2 = to_complex_structure({h.w, p}).h11_real;
  for (std::size_t k = 0; k < h.rank; ++k) {
    Vec e(h.rank);
    e[k] = imag_unit();
    d.r3.push_back(std::move(e));
  }
  return d;
}

bool check_subspace_rigidity(const Subspace& s, const Subspace& t, const AdmissibleDecomposition& d) {
  const std::size_t n = d.n;
  require(s.ambient() == n && t.ambient() == n, ErrorCode::DimensionMismatch, "subspaces must live in C^n");
  require(t.contains(s), ErrorCode::PreconditionFailed, "S is not contained in T");
  Subspace tr = realified(t);
  Subspace a1 = intersect(tr, real_span(n, d.r1));
  Subspace a2 = intersect(tr, real_span(n, d.r2));
  Subspace a3 = intersect(tr, real_span(n, d.r3));
  require(a1 + a2 + a3 == tr, ErrorCode::PreconditionFailed, "T is not the sum of its intersections with R_i");
  std::vector<Vec> r12 = d.r1;
  r12.insert(r12.end(), d.r2.begin(), d.r2.end());
  require(realified(s).contains(intersect(tr, real_span(n, r12))), ErrorCode::PreconditionFailed,
          "T cap (R1 + R2) is not contained in S");
  require(conj(s) == s, ErrorCode::PreconditionFailed, "S is not conjugation-stable");
  return s == t;
}

}  // namespace jumploci
