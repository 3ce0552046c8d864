#include "jumploci/filtered_complex.hpp"

#include <algorithm>
#include <climits>
#include <tuple>

#include "jumploci/errors.hpp"

namespace jumploci {

// ---------------------------------------------------------------------------
// SpaceFiltration / Filtration

SpaceFiltration::SpaceFiltration(std::size_t dim, int lo, std::vector<Subspace> steps)
    : dim_(dim), lo_(lo), steps_(std::move(steps)), whole_(Subspace::whole(dim)), zero_(dim) {
  const Subspace* prev = &whole_;
  for (const auto& s : steps_) {
    require(s.ambient() == dim, ErrorCode::DimensionMismatch, "filtration step lives in the wrong space");
    require(prev->contains(s), ErrorCode::PreconditionFailed, "filtration is not decreasing");
    prev = &s;
  }
}

SpaceFiltration SpaceFiltration::from_levels(const Matrix& basis, const std::vector<int>& levels) {
  require(basis.rows() == levels.size(), ErrorCode::DimensionMismatch, "one level per basis vector");
  const std::size_t dim = basis.cols();
  if (levels.empty()) return SpaceFiltration(dim, 0, {});
  const int lo = *std::min_element(levels.begin(), levels.end());
  const int hi = *std::max_element(levels.begin(), levels.end());
  std::vector<Subspace> steps;
  for (int p = lo; p <= hi; ++p) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < levels.size(); ++i)
      if (levels[i] >= p) rows.push_back(basis.row(i));
    steps.push_back(Subspace::span(dim, rows));
  }
  return SpaceFiltration(dim, lo, std::move(steps));
}

SpaceFiltration SpaceFiltration::single_step(std::size_t dim, int level) {
  return SpaceFiltration(dim, level, {Subspace::whole(dim)});
}

const Subspace& SpaceFiltration::at(int p) const {
  if (p < lo_) return whole_;
  if (p >= hi()) return zero_;
  return steps_[static_cast<std::size_t>(p - lo_)];
}

SpaceFiltration SpaceFiltration::shifted(int s) const {
  SpaceFiltration g(*this);
  g.lo_ = lo_ - s;
  return g;
}

Filtration Filtration::from_function(const std::vector<std::size_t>& dims, int lo, int hi,
                                     const std::function<Subspace(std::size_t, int)>& fn) {
  std::vector<SpaceFiltration> per;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    std::vector<Subspace> steps;
    for (int p = lo; p < hi; ++p) steps.push_back(fn(n, p));
    per.emplace_back(dims[n], lo, std::move(steps));
  }
  return Filtration(std::move(per));
}

int Filtration::lo() const {
  int v = INT_MAX;
  for (const auto& d : degrees_) v = std::min(v, d.lo());
  return degrees_.empty() ? 0 : v;
}

int Filtration::hi() const {
  int v = INT_MIN;
  for (const auto& d : degrees_) v = std::max(v, d.hi());
  return degrees_.empty() ? 0 : v;
}

Filtration Filtration::shifted(int s) const {
  std::vector<SpaceFiltration> per;
  for (const auto& d : degrees_) per.push_back(d.shifted(s));
  return Filtration(std::move(per));
}

// ---------------------------------------------------------------------------
// FilteredComplex

FilteredComplex::FilteredComplex(std::vector<std::size_t> dims, std::vector<Matrix> d)
    : dims_(std::move(dims)), d_(std::move(d)) {
  require(!dims_.empty(), ErrorCode::DimensionMismatch, "complex needs at least one degree");
  require(d_.size() + 1 == dims_.size(), ErrorCode::DimensionMismatch, "one differential per pair of degrees");
  for (std::size_t n = 0; n < d_.size(); ++n)
    require(d_[n].rows() == dims_[n + 1] && d_[n].cols() == dims_[n], ErrorCode::DimensionMismatch,
            "differential shape does not match dims");
  for (std::size_t n = 0; n + 1 < d_.size(); ++n)
    require((d_[n + 1] * d_[n]).is_zero(), ErrorCode::InvariantViolation, "d o d != 0");
}

Matrix FilteredComplex::differential(std::size_t n) const {
  if (n < d_.size()) return d_[n];
  return Matrix(0, dims_.at(n));
}

void FilteredComplex::set_filtration(const std::string& name, Filtration f) {
  require(f.num_degrees() == dims_.size(), ErrorCode::DimensionMismatch, "filtration has wrong number of degrees");
  for (std::size_t n = 0; n < dims_.size(); ++n)
    require(f.degree(n).dim() == dims_[n], ErrorCode::DimensionMismatch, "filtration lives in the wrong space");
  filtrations_[name] = std::move(f);
}

const Filtration& FilteredComplex::filtration(const std::string& name) const {
  auto it = filtrations_.find(name);
  require(it != filtrations_.end(), ErrorCode::PreconditionFailed, "missing filtration " + name);
  return it->second;
}

bool FilteredComplex::is_stable(const std::string& name) const {
  const Filtration& f = filtration(name);
  for (std::size_t n = 0; n < d_.size(); ++n)
    for (int p = f.lo(); p < f.hi(); ++p)
      if (!f.at(n + 1, p).contains(image(d_[n], f.at(n, p)))) return false;
  return true;
}

std::vector<std::size_t> FilteredComplex::cohomology_dims() const {
  std::vector<std::size_t> rk;
  for (const auto& m : d_) rk.push_back(rank(m));
  std::vector<std::size_t> h;
  for (std::size_t n = 0; n < dims_.size(); ++n)
    h.push_back(dims_[n] - (n < rk.size() ? rk[n] : 0) - (n > 0 ? rk[n - 1] : 0));
  return h;
}

// ---------------------------------------------------------------------------
// Opposedness

namespace {

using StepFn = std::function<Subspace(int)>;

std::size_t zassenhaus(const StepFn& f, const StepFn& c, int p, int q) {
  Subspace top = intersect(f(p), c(q));
  Subspace low = intersect(f(p + 1), c(q)) + intersect(f(p), c(q + 1));
  return top.dim() - low.dim();
}

/// Gr_f^p Gr_c^q vanishes off p + q = n, scanning the given index ranges.
bool opposed_fn(const StepFn& f, const StepFn& c, int flo, int fhi, int clo, int chi, int n) {
  for (int p = flo - 1; p <= fhi; ++p)
    for (int q = clo - 1; q <= chi; ++q)
      if (p + q != n && zassenhaus(f, c, p, q) != 0) return false;
  return true;
}

}  // namespace

std::size_t bigraded_piece_dim(const SpaceFiltration& f, const SpaceFiltration& c, int p, int q) {
  return zassenhaus([&](int i) { return f.at(i); }, [&](int i) { return c.at(i); }, p, q);
}

bool opposed(const SpaceFiltration& f, const SpaceFiltration& c, int n) {
  return opposed_fn([&](int i) { return f.at(i); }, [&](int i) { return c.at(i); }, f.lo(), f.hi(), c.lo(), c.hi(), n);
}

bool check_cmhs(const TriFilteredSpace& h) {
  for (int k = h.w.lo() - 1; k < h.w.hi(); ++k) {
    const Subspace wk = h.w.at(k);
    const Subspace wk1 = h.w.at(k + 1);
    StepFn f = [&](int p) { return intersect(h.f.at(p), wk) + wk1; };
    StepFn c = [&](int q) { return intersect(h.c.at(q), wk) + wk1; };
    // weight of W^k / W^{k+1} is -k
    if (!opposed_fn(f, c, h.f.lo(), h.f.hi(), h.c.lo(), h.c.hi(), -k)) return false;
  }
  return true;
}

bool check_morphism_strict(const TriFilteredSpace& h1, const TriFilteredSpace& h2, const Matrix& f) {
  require(f.rows() == h2.dim && f.cols() == h1.dim, ErrorCode::DimensionMismatch, "morphism has wrong shape");
  require(check_cmhs(h1) && check_cmhs(h2), ErrorCode::PreconditionFailed, "inputs must be C-mixed Hodge structures");
  const Subspace im = image(f);
  bool strict = true;
  for (auto [a, b] : {std::tie(h1.w, h2.w), std::tie(h1.f, h2.f), std::tie(h1.c, h2.c)}) {
    const int lo = std::min(a.lo(), b.lo()) - 1;
    const int hi = std::max(a.hi(), b.hi());
    for (int p = lo; p <= hi; ++p) {
      Subspace src = image(f, a.at(p));
      require(b.at(p).contains(src), ErrorCode::PreconditionFailed, "map does not preserve the filtrations");
      if (src != intersect(b.at(p), im)) strict = false;
    }
  }
  return strict;
}

// ---------------------------------------------------------------------------
// Spectral sequence

const SpectralPage& SpectralSequence::page(int r) const {
  require(!pages.empty(), ErrorCode::PreconditionFailed, "empty spectral sequence");
  if (r < 0) r = 0;
  if (static_cast<std::size_t>(r) >= pages.size()) return pages.back();
  return pages[static_cast<std::size_t>(r)];
}

namespace {

class PageBuilder {
 public:
  PageBuilder(const FilteredComplex& k, const Filtration& f) : k_(k), f_(f) {}

  Subspace filt(int n, int p) const {
    if (n < 0 || n >= static_cast<int>(k_.num_degrees())) return Subspace(0);
    return f_.at(static_cast<std::size_t>(n), p);
  }

  /// Z_r^p in degree n.
  const Subspace& z(int r, int n, int p) {
    auto key = std::make_tuple(r, n, p);
    auto it = z_.find(key);
    if (it != z_.end()) return it->second;
    Subspace fp = filt(n, p);
    Subspace out = fp;
    if (n + 1 < static_cast<int>(k_.num_degrees()))
      out = intersect(fp, preimage(k_.differential(static_cast<std::size_t>(n)), filt(n + 1, p + r)));
    return z_.emplace(key, std::move(out)).first->second;
  }

  /// d Z_r^p with Z taken in degree n - 1.
  Subspace dz(int r, int n, int p) {
    if (n == 0) return Subspace(k_.dims()[0]);
    return image(k_.differential(static_cast<std::size_t>(n - 1)), z(r, n - 1, p));
  }

  const Subquotient& e(int r, int n, int p) {
    auto key = std::make_tuple(r, n, p);
    auto it = e_.find(key);
    if (it != e_.end()) return it->second;
    Subspace denom = z(r - 1, n, p + 1) + dz(r - 1, n, p - r + 1);
    return e_.emplace(key, Subquotient(z(r, n, p), denom)).first->second;
  }

 private:
  const FilteredComplex& k_;
  const Filtration& f_;
  std::map<std::tuple<int, int, int>, Subspace> z_;
  std::map<std::tuple<int, int, int>, Subquotient> e_;
};

}  // namespace

SpectralSequence spectral_sequence(const FilteredComplex& k, const std::string& name) {
  if (!k.is_stable(name)) raise(ErrorCode::FiltrationNotStable, "filtration " + name + " is not preserved by d");
  const Filtration& f = k.filtration(name);
  const int pmin = f.lo() - 1;
  const int pmax = f.hi() - 1;
  const int last = pmax - pmin + 2;
  const int nd = static_cast<int>(k.num_degrees());
  PageBuilder b(k, f);
  SpectralSequence ss;
  for (int r = 0; r <= last; ++r) {
    SpectralPage page;
    page.r = r;
    for (int n = 0; n < nd; ++n)
      for (int p = pmin; p <= pmax; ++p) {
        const Subquotient& src = b.e(r, n, p);
        page.dims[{p, n}] = src.dim();
        if (n + 1 >= nd || p + r > pmax) continue;
        const Subquotient& dst = b.e(r, n + 1, p + r);
        Matrix m(dst.dim(), src.dim());
        const Matrix dn = k.differential(static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < src.dim(); ++j) {
          Vec img = jumploci::apply(dn, src.lift(j));
          Vec c = dst.coords(img);
          for (std::size_t i = 0; i < dst.dim(); ++i) m(i, j) = c[i];
        }
        page.differentials[{p, n}] = std::move(m);
      }
    ss.pages.push_back(std::move(page));
  }

  // d_r o d_r = 0 and E_{r+1} = H(E_r, d_r)
  for (const auto& page : ss.pages) {
    if (page.r == last) break;
    const int r = page.r;
    const auto& next = ss.pages[static_cast<std::size_t>(r + 1)];
    for (int n = 0; n < nd; ++n)
      for (int p = pmin; p <= pmax; ++p) {
        auto out = page.differentials.find({p, n});
        auto in = page.differentials.find({p - r, n - 1});
        if (out != page.differentials.end()) {
          auto after = page.differentials.find({p + r, n + 1});
          if (after != page.differentials.end())
            require((after->second * out->second).is_zero(), ErrorCode::InvariantViolation, "d_r o d_r != 0");
        }
        const std::size_t dim = page.dims.at({p, n});
        const std::size_t rank_out = out != page.differentials.end() ? rank(out->second) : 0;
        const std::size_t rank_in = in != page.differentials.end() ? rank(in->second) : 0;
        require(next.dims.at({p, n}) == dim - rank_out - rank_in, ErrorCode::InvariantViolation,
                "next page is not the cohomology of the previous one");
      }
  }

  // E_infinity = Gr of the induced filtration on H
  const SpectralPage& inf = ss.pages.back();
  for (int n = 0; n < nd; ++n) {
    const Subspace ker = Subspace::span(kernel(k.differential(static_cast<std::size_t>(n))));
    const Subspace im = n > 0 ? image(k.differential(static_cast<std::size_t>(n - 1))) : Subspace(k.dims()[0]);
    for (int p = pmin; p <= pmax; ++p) {
      const std::size_t hi = (intersect(b.filt(n, p), ker) + im).dim();
      const std::size_t lo = (intersect(b.filt(n, p + 1), ker) + im).dim();
      require(inf.dims.at({p, n}) == hi - lo, ErrorCode::InvariantViolation,
              "E_infinity differs from the graded cohomology");
    }
  }

  ss.degenerates_at = last;
  for (int r = last; r >= 0; --r) {
    if (ss.pages[static_cast<std::size_t>(r)].dims != inf.dims) break;
    ss.degenerates_at = r;
  }
  return ss;
}

// ---------------------------------------------------------------------------
// C-Hodge complexes

namespace {

const Subspace& in_degree(const Filtration& f, const FilteredComplex& k, int n, int p) {
  static const Subspace nothing(0);
  if (n < 0 || n >= static_cast<int>(k.num_degrees())) return nothing;
  return f.at(static_cast<std::size_t>(n), p);
}

}  // namespace

SpaceFiltration induced_on_graded_cohomology(const FilteredComplex& k, const std::string& name, std::size_t n, int p) {
  const Filtration& w = k.filtration("W");
  const Filtration& x = k.filtration(name);
  const int nn = static_cast<int>(n);
  const Subspace wp = w.at(n, p);
  const Subspace wp1 = w.at(n, p + 1);
  Subspace cycles = wp;
  if (n + 1 < k.num_degrees()) cycles = intersect(wp, preimage(k.differential(n), w.at(n + 1, p + 1)));
  Subspace bounds = wp1;
  if (n > 0) bounds = bounds + image(k.differential(n - 1), in_degree(w, k, nn - 1, p));
  Subquotient e1(cycles, bounds);
  std::vector<Subspace> steps;
  for (int i = x.lo(); i < x.hi(); ++i) steps.push_back(e1.induced(intersect(intersect(x.at(n, i), wp) + wp1, cycles)));
  return SpaceFiltration(e1.dim(), x.lo(), std::move(steps));
}

ChodgeReport check_chodge(const FilteredComplex& k) {
  ChodgeReport rep;
  for (const char* name : {"F", "C", "W"})
    if (!k.has_filtration(name) || !k.is_stable(name)) return rep;
  const Filtration& w = k.filtration("W");
  const int nd = static_cast<int>(k.num_degrees());

  // Gr_W^p in degree n vanishes: nothing to check there
  auto graded_zero = [&](int n, int p) { return in_degree(w, k, n, p).dim() == in_degree(w, k, n, p + 1).dim(); };

  rep.strict = true;
  for (int p = w.lo() - 1; p < w.hi() && rep.strict; ++p)
    for (int n = 0; n + 1 < nd && rep.strict; ++n) {
      if (graded_zero(n, p) && graded_zero(n + 1, p)) continue;
      const Matrix d = k.differential(static_cast<std::size_t>(n));
      const Subspace wn = in_degree(w, k, n, p), wn1 = in_degree(w, k, n, p + 1);
      const Subspace wt = in_degree(w, k, n + 1, p), w1 = in_degree(w, k, n + 1, p + 1);
      const Subspace im = image(d, wn) + w1;
      for (const char* name : {"F", "C"}) {
        const Filtration& x = k.filtration(name);
        for (int i = x.lo() - 1; i <= x.hi(); ++i) {
          // the answer only changes where one of the two filtrations jumps
          if (i < x.hi() && in_degree(x, k, n, i).dim() == in_degree(x, k, n, i + 1).dim() &&
              in_degree(x, k, n + 1, i).dim() == in_degree(x, k, n + 1, i + 1).dim())
            continue;
          const Subspace src = intersect(in_degree(x, k, n, i), wn) + wn1;
          const Subspace tgt = intersect(in_degree(x, k, n + 1, i), wt) + w1;
          if (image(d, src) + w1 != intersect(tgt, im)) {
            rep.strict = false;
            break;
          }
        }
      }
    }

  rep.opposed = true;
  for (int p = w.lo() - 1; p < w.hi() && rep.opposed; ++p)
    for (int n = 0; n < nd; ++n) {
      if (graded_zero(n, p)) continue;
      SpaceFiltration f = induced_on_graded_cohomology(k, "F", static_cast<std::size_t>(n), p);
      SpaceFiltration c = induced_on_graded_cohomology(k, "C", static_cast<std::size_t>(n), p);
      if (!opposed(f, c, n - p)) {
        rep.opposed = false;
        break;
      }
    }
  return rep;
}

std::vector<std::size_t> graded_piece_cohomology(const FilteredComplex& a, const std::string& name, int k) {
  const Filtration& f = a.filtration(name);
  const int nd = static_cast<int>(a.num_degrees());
  std::vector<std::size_t> h;
  for (int n = 0; n < nd; ++n) {
    Subspace fk = in_degree(f, a, n, k);
    Subspace cycles = fk;
    if (n + 1 < nd)
      cycles = intersect(fk, preimage(a.differential(static_cast<std::size_t>(n)), in_degree(f, a, n + 1, k + 1)));
    Subspace bounds = in_degree(f, a, n, k + 1);
    if (n > 0) bounds = bounds + image(a.differential(static_cast<std::size_t>(n - 1)), in_degree(f, a, n - 1, k));
    h.push_back(cycles.dim() - bounds.dim());
  }
  return h;
}

ComparisonReport check_graded_comparison(const FilteredComplex& a, const FilteredComplex& d, const std::string& v,
                                         int k, const std::vector<Matrix>& m) {
  require(a.num_degrees() == d.num_degrees() && m.size() == a.num_degrees(), ErrorCode::DimensionMismatch,
          "comparison needs one map per degree");
  const Filtration& f = a.filtration("F");
  const Filtration& w = a.filtration("W");
  const Filtration& vf = d.filtration(v);
  const int nd = static_cast<int>(a.num_degrees());
  for (int n = 0; n < nd; ++n)
    require(m[n].rows() == d.dims()[n] && m[n].cols() == a.dims()[n], ErrorCode::DimensionMismatch,
            "comparison map has wrong shape");
  ComparisonReport rep;
  const int lo = std::min(w.lo(), vf.lo()) - 1;
  const int hi = std::max(w.hi(), vf.hi());

  rep.morphism = true;
  for (int n = 0; n < nd && rep.morphism; ++n) {
    const Subspace fk = f.at(static_cast<std::size_t>(n), k);
    if (n + 1 < nd) {
      const auto un = static_cast<std::size_t>(n);
      for (const auto& x : fk.basis().row_data())
        if (jumploci::apply(m[un + 1], jumploci::apply(a.differential(un), x)) != jumploci::apply(d.differential(un), jumploci::apply(m[un], x))) {
          rep.morphism = false;
          break;
        }
    }
    for (int p = lo; p <= hi && rep.morphism; ++p)
      if (!vf.at(static_cast<std::size_t>(n), p)
               .contains(image(m[static_cast<std::size_t>(n)], intersect(fk, w.at(static_cast<std::size_t>(n), p)))))
        rep.morphism = false;
  }

  rep.exact = rep.morphism;
  for (int n = 0; n < nd && rep.exact; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (int p = lo; p <= hi; ++p) {
      const Subspace s = intersect(f.at(un, k), w.at(un, p));
      const Subspace kern = intersect(s, preimage(m[un], vf.at(un, p + 1)));
      const Subspace expected = intersect(f.at(un, k + 1), w.at(un, p)) + intersect(f.at(un, k), w.at(un, p + 1));
      if (kern != expected || image(m[un], s) + vf.at(un, p + 1) != vf.at(un, p)) {
        rep.exact = false;
        break;
      }
    }
  }

  rep.degenerates = spectral_sequence(d, v).degenerates_by(2);
  rep.same_cohomology = graded_piece_cohomology(a, "F", k) == d.cohomology_dims();
  return rep;
}

}  // namespace jumploci
