#include "jumploci/cons.hpp"

#include <algorithm>

#include "jumploci/errors.hpp"

namespace jumploci {

namespace {

Matrix zero_map(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

/// Operator X maps step p of f into step p + shift of g in every degree.
bool maps_into(const std::vector<Matrix>& x, std::size_t degree_shift, const Filtration& f, const Filtration& g,
               int shift) {
  const int lo = std::min(f.lo(), g.lo() - shift) - 1;
  const int hi = std::max(f.hi(), g.hi() - shift) + 1;
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (n + degree_shift >= g.num_degrees()) continue;
    for (int p = lo; p <= hi; ++p)
      if (!g.at(n + degree_shift, p + shift).contains(image(x[n], f.at(n, p)))) return false;
  }
  return true;
}

std::vector<Matrix> sum(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::vector<Matrix> out;
  for (std::size_t n = 0; n < a.size(); ++n) out.push_back(a[n] + b[n]);
  return out;
}

std::vector<Matrix> minus(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::vector<Matrix> out;
  for (std::size_t n = 0; n < a.size(); ++n) out.push_back(a[n] - b[n]);
  return out;
}

/// [x, y] = x y + sign * y x for degree-raising operators (one matrix per degree).
bool relation_vanishes(const std::vector<Matrix>& x, const std::vector<Matrix>& y, int sign) {
  for (std::size_t n = 0; n + 1 < x.size(); ++n) {
    Matrix m = x[n + 1] * y[n];
    Matrix o = y[n + 1] * x[n];
    if (!(sign > 0 ? m + o : m - o).is_zero()) return false;
  }
  return true;
}

/// Bidegree check: entry (r, c) of an A^n -> A^{n+s} map may be nonzero only if
/// the holomorphic degree rises by di.
bool has_type(const BigradedModuleData& a, const std::vector<Matrix>& x, std::size_t s, int di) {
  for (std::size_t n = 0; n < x.size(); ++n)
    for (std::size_t r = 0; r < x[n].rows(); ++r)
      for (std::size_t c = 0; c < x[n].cols(); ++c)
        if (!x[n](r, c).is_zero() && a.holomorphic[n + s][r] != a.holomorphic[n][c] + di) return false;
  return true;
}

Filtration holomorphic_filtration(const BigradedModuleData& a) {
  std::vector<SpaceFiltration> per;
  for (const auto& levels : a.holomorphic) per.push_back(SpaceFiltration::from_levels(Matrix::identity(levels.size()), levels));
  return Filtration(std::move(per));
}

}  // namespace

std::vector<std::size_t> BigradedModuleData::dims() const {
  std::vector<std::size_t> d;
  for (const auto& h : holomorphic) d.push_back(h.size());
  return d;
}

Subspace BigradedModuleData::type_piece(std::size_t n, int i) const {
  const std::size_t dim = holomorphic.at(n).size();
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < dim; ++k)
    if (holomorphic[n][k] == i) {
      Vec e(dim);
      e[k] = Cyclo(1);
      rows.push_back(std::move(e));
    }
  return Subspace::span(dim, rows);
}

void validate(const BigradedModuleData& a) {
  const auto dims = a.dims();
  const std::size_t nd = dims.size();
  require(nd >= 1, ErrorCode::PreconditionFailed, "module has no degrees");
  auto shapes = [&](const std::vector<Matrix>& x, std::size_t s, const char* what) {
    require(x.size() + s == nd || (s == 0 && x.size() == nd), ErrorCode::DimensionMismatch,
            std::string("wrong number of blocks for ") + what);
    for (std::size_t n = 0; n < x.size(); ++n)
      require(x[n].rows() == dims[n + s] && x[n].cols() == dims[n], ErrorCode::DimensionMismatch,
              std::string("wrong block shape for ") + what);
  };
  shapes(a.d1, 1, "d'");
  shapes(a.d2, 1, "d''");
  shapes(a.theta, 1, "theta");
  shapes(a.phi, 1, "phi");
  shapes(a.psi, 0, "psi");
  require(has_type(a, a.d1, 1, 1), ErrorCode::PreconditionFailed, "d' is not of type (1,0)");
  require(has_type(a, a.d2, 1, 0), ErrorCode::PreconditionFailed, "d'' is not of type (0,1)");
  require(has_type(a, a.theta, 1, 1), ErrorCode::PreconditionFailed, "theta is not of type (1,0)");
  require(has_type(a, a.phi, 1, 1), ErrorCode::PreconditionFailed, "phi is not of type (1,0)");
  require(has_type(a, a.psi, 0, 0), ErrorCode::PreconditionFailed, "psi is not of type (0,0)");
  require(relation_vanishes(a.d1, a.d1, 1) && relation_vanishes(a.d2, a.d2, 1) && relation_vanishes(a.d1, a.d2, 1),
          ErrorCode::PreconditionFailed, "d'^2, d''^2 or d'd'' + d''d' is nonzero");
  require(relation_vanishes(a.theta, a.theta, 1) && relation_vanishes(a.phi, a.phi, 1) &&
              relation_vanishes(a.theta, a.phi, 1),
          ErrorCode::PreconditionFailed, "theta, phi do not square to zero / anticommute");
  const std::vector<Matrix> d = sum(a.d1, a.d2);
  require(relation_vanishes(d, a.theta, 1), ErrorCode::PreconditionFailed, "d theta != 0");
  require(relation_vanishes(d, a.phi, 1), ErrorCode::PreconditionFailed, "d phi != 0");
  require(a.c.num_degrees() == nd && a.w.num_degrees() == nd, ErrorCode::DimensionMismatch,
          "filtrations have wrong number of degrees");

  require(maps_into(a.theta, 1, a.c, a.c, 0) && maps_into(a.theta, 1, a.w, a.w, 0), ErrorCode::PreconditionFailed,
          "theta is not in C^0 cap W^0");
  require(maps_into(a.phi, 1, a.c, a.c, 0) && maps_into(a.phi, 1, a.w, a.w, -1), ErrorCode::PreconditionFailed,
          "phi is not in C^0 cap W^-1");
  require(maps_into(a.psi, 0, a.w, a.w, -1), ErrorCode::PreconditionFailed, "psi is not in W^-1");
  // (d psi) as an operator is d o psi - psi o d
  std::vector<Matrix> dpsi;
  for (std::size_t n = 0; n + 1 < nd; ++n) dpsi.push_back(d[n] * a.psi[n] - a.psi[n + 1] * d[n]);
  require(maps_into(minus(a.phi, dpsi), 1, a.c, a.c, 1), ErrorCode::PreconditionFailed, "phi - d psi is not in C^1");
  // psi must act like multiplication by a function: it commutes with phi and
  // with d psi. Otherwise exp(psi) does not carry the corrected C onto a subcomplex.
  for (std::size_t n = 0; n + 1 < nd; ++n) {
    require((a.psi[n + 1] * a.phi[n] - a.phi[n] * a.psi[n]).is_zero(), ErrorCode::PreconditionFailed,
            "psi does not commute with phi");
    require((a.psi[n + 1] * dpsi[n] - dpsi[n] * a.psi[n]).is_zero(), ErrorCode::PreconditionFailed,
            "psi does not commute with d psi");
  }

  for (std::size_t n = 0; n < nd; ++n)
    for (int p = a.w.lo() - 1; p <= a.w.hi(); ++p) {
      Subspace whole = a.w.at(n, p);
      Subspace split(dims[n]);
      for (int i : a.holomorphic[n]) split = split + intersect(whole, a.type_piece(n, i));
      require(split == whole, ErrorCode::PreconditionFailed, "W does not split along types");
    }
  FilteredComplex k = total_complex(a);
  require(k.is_stable("C") && k.is_stable("W"), ErrorCode::PreconditionFailed, "C or W is not a subcomplex");
  require(check_chodge(k).ok(), ErrorCode::PreconditionFailed, "(A, F, C, W) is not a C-Hodge complex");
}

FilteredComplex total_complex(const BigradedModuleData& a) {
  FilteredComplex k(a.dims(), sum(a.d1, a.d2));
  k.set_filtration("F", holomorphic_filtration(a));
  k.set_filtration("C", a.c);
  k.set_filtration("W", a.w);
  return k;
}

FilteredComplex twisted_complex(const std::vector<std::size_t>& dims, const std::vector<std::vector<Matrix>>& parts) {
  std::vector<Matrix> d;
  for (std::size_t n = 0; n + 1 < dims.size(); ++n) {
    Matrix m = zero_map(dims[n + 1], dims[n]);
    for (const auto& p : parts) m = m + p[n];
    d.push_back(std::move(m));
  }
  return FilteredComplex(dims, std::move(d));
}

namespace {

/// Block vector helpers for B^n = (A^n)^{slots}.
Vec embed_slot(const Vec& v, std::size_t slot, std::size_t slots) {
  Vec out(v.size() * slots);
  std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(slot * v.size()));
  return out;
}

/// Direct sum over slots of the subspaces level(k) of A^n.
Subspace slot_sum(std::size_t dim, std::size_t slots, const std::function<Subspace(std::size_t)>& level) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < slots; ++k) {
    const Subspace s = level(k);
    for (const auto& r : s.basis().row_data()) rows.push_back(embed_slot(r, k, slots));
  }
  return Subspace::span(dim * slots, std::move(rows));
}

Filtration slot_filtration(const std::vector<std::size_t>& dims, std::size_t slots, const Filtration& f, int step) {
  int lo = f.lo(), hi = f.hi();
  for (std::size_t k = 0; k < slots; ++k) {
    lo = std::min(lo, f.lo() - static_cast<int>(k) * step);
    hi = std::max(hi, f.hi() - static_cast<int>(k) * step);
  }
  std::vector<std::size_t> bdims;
  for (auto d : dims) bdims.push_back(d * slots);
  return Filtration::from_function(bdims, lo, hi, [&](std::size_t n, int p) {
    return slot_sum(dims[n], slots, [&](std::size_t k) { return f.at(n, p + static_cast<int>(k) * step); });
  });
}

}  // namespace

FilteredComplex cons(const FilteredComplex& a, const std::vector<Matrix>& theta, const std::vector<Matrix>& psi, int ashift,
                     int bshift, std::size_t slots_n) {
  require(slots_n >= 1, ErrorCode::PreconditionFailed, "N must be at least 1");
  const std::size_t slots = slots_n + 1;
  const auto& dims = a.dims();
  const std::size_t nd = dims.size();
  require(theta.size() + 1 == nd && psi.size() == nd, ErrorCode::DimensionMismatch, "operator blocks do not match A");
  require(maps_into(theta, 1, a.filtration("F"), a.filtration("F"), ashift) &&
              maps_into(theta, 1, a.filtration("W"), a.filtration("W"), -(ashift + bshift)),
          ErrorCode::PreconditionFailed, "theta is not in F^a cap W^-(a+b)");

  std::vector<std::size_t> bdims;
  for (auto d : dims) bdims.push_back(d * slots);
  std::vector<Matrix> delta;
  for (std::size_t n = 0; n + 1 < nd; ++n) {
    Matrix m(bdims[n + 1], bdims[n]);
    const Matrix dn = a.differential(n);
    for (std::size_t k = 0; k < slots; ++k)
      for (std::size_t r = 0; r < dims[n + 1]; ++r)
        for (std::size_t c = 0; c < dims[n]; ++c) {
          m(k * dims[n + 1] + r, k * dims[n] + c) = dn(r, c);
          if (k > 0) m(k * dims[n + 1] + r, (k - 1) * dims[n] + c) = theta[n](r, c);
        }
    delta.push_back(std::move(m));
  }
  FilteredComplex b(bdims, std::move(delta));
  b.set_filtration("F", slot_filtration(dims, slots, a.filtration("F"), ashift));
  b.set_filtration("W", slot_filtration(dims, slots, a.filtration("W"), -(ashift + bshift)));
  const Filtration plain = slot_filtration(dims, slots, a.filtration("C"), bshift);
  b.set_filtration("C_uncorrected", plain);

  // Phi^{-1} = sum_j (-psi)^j / j! on the slot shift
  std::vector<Matrix> inv_phi;
  for (std::size_t n = 0; n < nd; ++n) {
    const std::size_t dn = dims[n];
    std::vector<Matrix> powers{Matrix::identity(dn)};
    Cyclo factorial(1);
    for (std::size_t j = 1; j < slots; ++j) {
      factorial *= Cyclo(static_cast<long>(j));
      powers.push_back(Cyclo(-1) * (psi[n] * powers.back()));
    }
    Matrix m(bdims[n], bdims[n]);
    Cyclo fact(1);
    for (std::size_t j = 0; j < slots; ++j) {
      if (j > 0) fact *= Cyclo(static_cast<long>(j));
      const Cyclo inv = Cyclo(1) / fact;
      for (std::size_t k = j; k < slots; ++k)
        for (std::size_t r = 0; r < dn; ++r)
          for (std::size_t c = 0; c < dn; ++c)
            if (!powers[j](r, c).is_zero()) m(k * dn + r, (k - j) * dn + c) = inv * powers[j](r, c);
    }
    inv_phi.push_back(std::move(m));
  }
  std::vector<SpaceFiltration> corrected;
  for (std::size_t n = 0; n < nd; ++n) {
    const SpaceFiltration& pf = plain.degree(n);
    std::vector<Subspace> steps;
    for (int p = pf.lo(); p < pf.hi(); ++p) steps.push_back(image(inv_phi[n], pf.at(p)));
    corrected.emplace_back(bdims[n], pf.lo(), std::move(steps));
  }
  b.set_filtration("C", Filtration(std::move(corrected)));

  require(b.is_stable("C"), ErrorCode::InvariantViolation, "corrected C filtration is not a subcomplex");
  const Filtration& ct = b.filtration("C");
  const Filtration& w = b.filtration("W");
  for (std::size_t n = 0; n < nd; ++n)
    for (int k = w.lo() - 1; k <= w.hi(); ++k)
      for (int p = ct.lo() - 1; p <= ct.hi(); ++p) {
        const Subspace wk = w.at(n, k), wk1 = w.at(n, k + 1);
        require(intersect(ct.at(n, p), wk) + wk1 == intersect(plain.at(n, p), wk) + wk1, ErrorCode::InvariantViolation,
                "corrected and uncorrected C differ on Gr_W");
      }
  return b;
}

std::size_t default_slots(const BigradedModuleData& a) {
  int top = 0;
  for (const auto& h : a.holomorphic)
    for (int i : h) top = std::max(top, i + 1);
  return static_cast<std::size_t>(std::max(1, top));
}

FilteredComplex cons(const BigradedModuleData& a, ConsMode mode, std::size_t slots) {
  FilteredComplex k = total_complex(a);
  if (mode == ConsMode::Theta) {
    std::vector<Matrix> zero;
    for (auto d : a.dims()) zero.emplace_back(d, d);
    return cons(k, a.theta, zero, 1, 0, slots);
  }
  return cons(k, a.phi, a.psi, 1, 1, slots);
}

Filtration v_filtration(const BigradedModuleData& a, int b) {
  const Filtration& w = a.w;
  int lo = w.lo(), hi = w.hi();
  int imin = 0, imax = 0;
  for (const auto& h : a.holomorphic)
    for (int i : h) {
      imin = std::min(imin, i);
      imax = std::max(imax, i);
    }
  lo += (b + 1) * imin;
  hi += (b + 1) * imax;
  return Filtration::from_function(a.dims(), lo, hi, [&](std::size_t n, int k) {
    Subspace s(a.holomorphic[n].size());
    for (int i = imin; i <= imax; ++i) s = s + intersect(w.at(n, k - (b + 1) * i), a.type_piece(n, i));
    return s;
  });
}

TwistedPair twisted_cohomology_pair(const BigradedModuleData& a, ConsMode which) {
  const int b = which == ConsMode::Theta ? 0 : 1;
  const std::vector<Matrix>& xi = which == ConsMode::Theta ? a.theta : a.phi;
  const auto dims = a.dims();
  const Filtration v = v_filtration(a, b);

  FilteredComplex total = twisted_complex(dims, {a.d1, a.d2, xi});
  total.set_filtration("V", v);
  FilteredComplex dbar = twisted_complex(dims, {a.d2, xi});
  dbar.set_filtration("V", v);

  TwistedPair out;
  out.total = total.cohomology_dims();
  out.dbar = dbar.cohomology_dims();
  out.total_sequence = spectral_sequence(total, "V");
  out.dbar_sequence = spectral_sequence(dbar, "V");
  out.total_degenerates = out.total_sequence.degenerates_by(2);
  out.dbar_degenerates = out.dbar_sequence.degenerates_by(2);

  const std::size_t slots = default_slots(a);
  FilteredComplex c = cons(a, which, slots);
  std::vector<Matrix> sigma;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    Matrix m(dims[n], dims[n] * (slots + 1));
    for (std::size_t k = 0; k <= slots; ++k)
      for (std::size_t i = 0; i < dims[n]; ++i) m(i, k * dims[n] + i) = Cyclo(1);
    sigma.push_back(std::move(m));
  }
  out.comparison = check_graded_comparison(c, total, "V", 0, sigma);
  return out;
}

bool check_nonvanishing_transfer(const BigradedModuleData& a) {
  const Filtration v = v_filtration(a, 1);
  require(maps_into(a.theta, 1, v, v, 2), ErrorCode::PreconditionFailed, "theta V(1)^p is not inside V(1)^{p+2}");
  const auto dims = a.dims();
  const auto with_theta = twisted_complex(dims, {a.d1, a.d2, a.theta, a.phi}).cohomology_dims();
  const auto without = twisted_complex(dims, {a.d1, a.d2, a.phi}).cohomology_dims();
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (with_theta[i] != 0 && without[i] == 0) return false;
  return true;
}

}  // namespace jumploci
