#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/linalg.hpp"

namespace jumploci {

/// Decreasing filtration of one finite-dimensional space:
/// F^p = whole for p < lo, steps[p - lo] for lo <= p < lo + steps.size(), 0 after.
class SpaceFiltration {
 public:
  SpaceFiltration() = default;
  SpaceFiltration(std::size_t dim, int lo, std::vector<Subspace> steps);
  /// F^p = span of the basis rows whose level is >= p.
  static SpaceFiltration from_levels(const Matrix& basis, const std::vector<int>& levels);
  /// F^p = whole for p <= level, 0 above.
  static SpaceFiltration single_step(std::size_t dim, int level);

  std::size_t dim() const { return dim_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(steps_.size()); }
  const Subspace& at(int p) const;
  /// G^p = F^{p + s}.
  SpaceFiltration shifted(int s) const;

 private:
  std::size_t dim_ = 0;
  int lo_ = 0;
  std::vector<Subspace> steps_;
  Subspace whole_, zero_;
};

/// Filtration of a graded space, one chain per degree.
class Filtration {
 public:
  Filtration() = default;
  explicit Filtration(std::vector<SpaceFiltration> per_degree) : degrees_(std::move(per_degree)) {}
  /// Steps fn(n, p) for lo <= p < hi; fn(n, lo - 1) is taken to be everything.
  static Filtration from_function(const std::vector<std::size_t>& dims, int lo, int hi,
                                  const std::function<Subspace(std::size_t, int)>& fn);

  std::size_t num_degrees() const { return degrees_.size(); }
  const SpaceFiltration& degree(std::size_t n) const { return degrees_.at(n); }
  const Subspace& at(std::size_t n, int p) const { return degrees_.at(n).at(p); }
  int lo() const;
  int hi() const;
  Filtration shifted(int s) const;

 private:
  std::vector<SpaceFiltration> degrees_;
};

/// Cochain complex A^0 -> ... -> A^L of finite-dimensional spaces with named
/// decreasing filtrations. Increasing filtrations are stored as W_n = W^{-n}.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  /// Checks shapes and d o d = 0.
  FilteredComplex(std::vector<std::size_t> dims, std::vector<Matrix> d);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t num_degrees() const { return dims_.size(); }
  /// d^n : A^n -> A^{n+1}; zero map past the ends.
  Matrix differential(std::size_t n) const;
  const std::vector<Matrix>& differentials() const { return d_; }

  void set_filtration(const std::string& name, Filtration f);
  bool has_filtration(const std::string& name) const { return filtrations_.count(name) != 0; }
  const Filtration& filtration(const std::string& name) const;
  const std::map<std::string, Filtration>& filtrations() const { return filtrations_; }

  /// Every step of the named filtration is mapped into itself by d.
  bool is_stable(const std::string& name) const;
  std::vector<std::size_t> cohomology_dims() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> d_;
  std::map<std::string, Filtration> filtrations_;
};

/// One vector space with W (decreasing index), F, C.
struct TriFilteredSpace {
  std::size_t dim = 0;
  SpaceFiltration w, f, c;
};

/// dim Gr_F^p Gr_C^q V for two filtrations on V (Zassenhaus count).
std::size_t bigraded_piece_dim(const SpaceFiltration& f, const SpaceFiltration& c, int p, int q);

/// F, C are n-opposed: Gr_F^p Gr_C^q = 0 whenever p + q != n.
bool opposed(const SpaceFiltration& f, const SpaceFiltration& c, int n);

/// Gr_F^p Gr_C^q Gr^W_n = 0 for p + q != n, with W_n = W^{-n}.
bool check_cmhs(const TriFilteredSpace& h);

/// Morphism f : H1 -> H2 of C-mixed Hodge structures is strict for W, F, C:
/// f(X^p H1) = X^p H2 cap f(H1). Raises PreconditionFailed if f does not
/// preserve the filtrations or an input is not a C-MHS.
bool check_morphism_strict(const TriFilteredSpace& h1, const TriFilteredSpace& h2, const Matrix& f);

struct SpectralPage {
  int r = 0;
  /// (p, n) -> dim E_r^{p, n-p}
  std::map<std::pair<int, int>, std::size_t> dims;
  /// (p, n) -> matrix of d_r : E_r^{p, n-p} -> E_r^{p+r, n-p-r+1}
  std::map<std::pair<int, int>, Matrix> differentials;
};

struct SpectralSequence {
  std::vector<SpectralPage> pages;  // r = 0, 1, ..., last (last = E_infinity)
  /// Smallest r with E_r = E_infinity.
  int degenerates_at = 0;
  const SpectralPage& page(int r) const;
  bool degenerates_by(int r) const { return degenerates_at <= r; }
};

/// Z_r^p = F^p cap d^{-1} F^{p+r}, E_r^p = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}).
/// Checks d_r o d_r = 0, E_{r+1} = H(E_r, d_r) and E_infinity = Gr H
/// (InvariantViolation otherwise). Raises FiltrationNotStable.
SpectralSequence spectral_sequence(const FilteredComplex& k, const std::string& name);

struct ChodgeReport {
  bool strict = false;
  bool opposed = false;
  bool ok() const { return strict && opposed; }
};

/// (a) F and C strict on every Gr_W^p, (b) F and C q-opposed on each
/// E_1^{pq}(W) = H^{p+q}(Gr_W^p). Needs filtrations "F", "C", "W".
ChodgeReport check_chodge(const FilteredComplex& k);

/// Induced filtration of the named filtration on H^n(Gr_W^p) as a filtration
/// of the quotient coordinates.
SpaceFiltration induced_on_graded_cohomology(const FilteredComplex& k, const std::string& name, std::size_t n, int p);

/// Comparison of a C-Hodge complex (A, F, C, W) with a filtered complex (D, V)
/// through a chain map m defined on F^k.
struct ComparisonReport {
  bool morphism = false;        // m commutes with d on F^k and maps F^k cap W^p into V^p
  bool exact = false;           // 0 -> F^{k+1} Gr_W -> F^k Gr_W -> Gr_V D -> 0
  bool degenerates = false;     // E_2(D, V) = E_infinity(D, V)
  bool same_cohomology = false; // dim H(Gr_F^k A) = dim H(D)
};

ComparisonReport check_graded_comparison(const FilteredComplex& a, const FilteredComplex& d, const std::string& v,
                                         int k, const std::vector<Matrix>& m);

/// dim H^n of Gr_F^k with the induced differential.
std::vector<std::size_t> graded_piece_cohomology(const FilteredComplex& a, const std::string& name, int k);

}  // namespace jumploci
