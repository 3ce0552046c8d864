#pragma once

#include <cstddef>
#include <vector>

#include "jumploci/integer_lattice.hpp"
#include "jumploci/twisted_complex.hpp"

namespace jumploci {

/// Common zero set (inside the torus) of a list of generators.
struct ClosedPiece {
  std::vector<LaurentPoly> generators;
  bool whole_torus = false;
  /// Rank split (rank d^k <= a, rank d^{k-1} <= c) this piece encodes.
  std::size_t split_a = 0;
  std::size_t split_c = 0;
};

struct LocusUnion {
  std::size_t nvars = 0;
  std::vector<ClosedPiece> members;
};

/// rho * image of (C*)^c under t_i = prod_a s_a^{E_ia}.
struct TranslatedSubtorus {
  IntMatrix embed;  // b x c
  std::size_t dim = 0;
  std::vector<Cyclo> translate;

  /// Checks shapes, nonzero translate, and full column rank of E.
  void validate() const;
};

/// Union over rank splits a + c = n_k - m of V(minors(d^k, a+1), minors(d^{k-1}, c+1)).
LocusUnion sigma_locus(const FreeComplex& k, std::size_t degree, std::size_t m,
                       std::size_t minor_budget = kDefaultMinorBudget);

/// GENERIC coordinates are allowed: a generator then has to vanish identically
/// in them.
bool locus_contains(const LocusUnion& l, const CharacterPoint& p);

/// Some member vanishes identically on the subtorus.
bool subtorus_contained(const LocusUnion& l, const TranslatedSubtorus& s);

struct ExpLineClosure {
  TranslatedSubtorus torus;
  /// Basis of {m in Z^b : m . v = 0}.
  std::vector<IntVec> kernel_lattice;
};

/// Smallest subtorus containing exp(R v) for rational v; raises ZeroVector.
ExpLineClosure closure_of_exp_line(const std::vector<Rational>& v);

}  // namespace jumploci
