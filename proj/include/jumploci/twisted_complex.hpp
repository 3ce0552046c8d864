#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "jumploci/integer_lattice.hpp"
#include "jumploci/ring_matrix.hpp"

namespace jumploci {

/// (generator index, exponent +1 or -1)
using Letter = std::pair<std::size_t, int>;
using Word = std::vector<Letter>;

/// Finite presentation. Relators are freely reduced on construction and the
/// abelianization Z^g -> Z^b (free part) is computed by Smith normal form.
class GroupPresentation {
 public:
  GroupPresentation(std::size_t ngens, std::vector<Word> relators);

  std::size_t ngens() const { return ngens_; }
  const std::vector<Word>& relators() const { return relators_; }
  /// Rank of the free part of H_1.
  std::size_t betti() const { return betti_; }
  /// Row i is the image of generator i in Z^b.
  const IntMatrix& abelianization() const { return alpha_; }
  /// Invariant factors > 1 of H_1.
  const IntVec& torsion() const { return torsion_; }

 private:
  std::size_t ngens_;
  std::vector<Word> relators_;
  std::size_t betti_ = 0;
  IntMatrix alpha_;
  IntVec torsion_;
};

Word freely_reduce(const Word& w);

/// Finite cochain complex of free modules over Q(zeta)[t_1^{+-1}, ..., t_b^{+-1}].
/// differential(k) maps rank n_k to n_{k+1} and has shape n_{k+1} x n_k.
class FreeComplex {
 public:
  FreeComplex() = default;
  /// Checks shapes and d o d = 0 exactly (raises DimensionMismatch / InvariantViolation).
  FreeComplex(std::size_t nvars, std::vector<std::size_t> ranks, std::vector<RingMatrix> differentials);

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t top_degree() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
  const std::vector<RingMatrix>& differentials() const { return diffs_; }
  const RingMatrix& differential(std::size_t k) const { return diffs_.at(k); }

 private:
  std::size_t nvars_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<RingMatrix> diffs_;
};

/// R -> R^g -> R^s with the column (t^{alpha(x_i)} - 1) and the abelianized
/// Fox matrix; d(uv)/dx = du/dx + u * dv/dx. Raises UnsupportedTorsion.
FreeComplex fox_complex(const GroupPresentation& g);

/// Abelianized Fox derivative of a word with respect to generator x.
LaurentPoly fox_derivative(const Word& w, std::size_t x, const IntMatrix& alpha, std::size_t nvars);

/// Cover nerve with a rank-n cocycle on its edges.
struct CoverDatum {
  std::size_t nsets = 0;
  std::size_t rank = 1;
  std::size_t nvars = 0;
  /// Nonempty intersections as increasing index tuples (must be downward closed).
  std::vector<std::vector<std::size_t>> nerve;
  /// Transition matrix for each edge (a, b) with a < b.
  std::map<std::pair<std::size_t, std::size_t>, RingMatrix> cocycle;
};

/// (dv)_{i0..im} = u_{i0 i1} v_{i1..im} + sum_{k>=1} (-1)^k v_{i0..^ik..im}.
/// Raises CocycleViolation if u_ab u_bc != u_ac on a flagged triple.
FreeComplex cech_complex(const CoverDatum& c);

/// h^k = n_k - rank d^k - rank d^{k-1} at p.
std::vector<std::size_t> cohomology_dims(const FreeComplex& k, const CharacterPoint& p);

}  // namespace jumploci
