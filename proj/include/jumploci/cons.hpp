#pragma once

#include <cstddef>
#include <vector>

#include "jumploci/filtered_complex.hpp"

namespace jumploci {

/// Finite-dimensional bigraded module A = sum A^{ij} with d' of type (1,0),
/// d'' of type (0,1), operators theta, phi of type (1,0) and psi of type (0,0),
/// and filtrations C, W. F^k is spanned by the basis vectors with i >= k.
struct BigradedModuleData {
  /// holomorphic[n][k] = i for the k-th basis vector of A^n (of type (i, n - i)).
  std::vector<std::vector<int>> holomorphic;
  std::vector<Matrix> d1;     // d' : A^n -> A^{n+1}
  std::vector<Matrix> d2;     // d''
  std::vector<Matrix> theta;  // A^n -> A^{n+1}
  std::vector<Matrix> phi;    // A^n -> A^{n+1}
  std::vector<Matrix> psi;    // A^n -> A^n
  Filtration c;
  Filtration w;

  std::vector<std::size_t> dims() const;
  /// Subspace of A^n spanned by the basis vectors of type (i, n - i).
  Subspace type_piece(std::size_t n, int i) const;
};

/// Checks bidegrees, the square-zero relations, filtration memberships of
/// theta, phi, psi, that W splits along types and that (A, F, C, W) is a
/// C-Hodge complex. Raises PreconditionFailed naming the failed condition.
void validate(const BigradedModuleData& a);

/// (A, d' + d'') with filtrations F, C, W.
FilteredComplex total_complex(const BigradedModuleData& a);

/// A with differential d + sum of the given operators (no filtrations).
FilteredComplex twisted_complex(const std::vector<std::size_t>& dims, const std::vector<std::vector<Matrix>>& parts);

enum class ConsMode { Theta, PhiPsi };

/// Slots 0..N of the same degree, delta(a)_k = d a_k + theta a_{k-1}.
/// Filtrations: "F" (slot k in F^{p+ka}), "W" (slot k in W^{p-k(a+b)}),
/// "C" the psi-corrected filtration and "C_uncorrected" (slot k in C^{p+kb}).
/// Raises PreconditionFailed unless theta is in F^a cap W^{-(a+b)}, and
/// InvariantViolation if the corrected filtration is not a subcomplex
/// or differs from the uncorrected one on Gr_W.
FilteredComplex cons(const FilteredComplex& a, const std::vector<Matrix>& theta, const std::vector<Matrix>& psi, int ashift,
                     int bshift, std::size_t slots);

/// Theta mode uses (theta, psi = 0, a = 1, b = 0); PhiPsi uses (phi, psi, a = b = 1).
FilteredComplex cons(const BigradedModuleData& a, ConsMode mode, std::size_t slots);

/// Smallest N with F^{N} A = 0 (at least 1).
std::size_t default_slots(const BigradedModuleData& a);

/// V(b)^k A^{ij} = W^{k-(b+1)i} A^{ij}.
Filtration v_filtration(const BigradedModuleData& a, int b);

struct TwistedPair {
  std::vector<std::size_t> total;  // H(A; d + xi)
  std::vector<std::size_t> dbar;   // H(A; d'' + xi)
  bool total_degenerates = false;  // V(b) spectral sequence has E_2 = E_infinity
  bool dbar_degenerates = false;
  SpectralSequence total_sequence;
  SpectralSequence dbar_sequence;
  /// Comparison of Cons(A, xi, psi) with (A, d + xi, V(b)) through the slot sum.
  ComparisonReport comparison;
};

/// xi = theta with b = 0, or xi = phi with b = 1.
TwistedPair twisted_cohomology_pair(const BigradedModuleData& a, ConsMode which);

/// H^i(A; d + theta + phi) != 0 implies H^i(A; d + phi) != 0 in every degree.
/// Requires theta V(1)^p in V(1)^{p+2} (PreconditionFailed).
bool check_nonvanishing_transfer(const BigradedModuleData& a);

}  // namespace jumploci
