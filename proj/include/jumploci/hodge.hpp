#pragma once

#include <cstddef>
#include <vector>

#include "jumploci/linalg.hpp"

namespace jumploci {

/// Lattice Z^n with a rational weight subspace W and a Hodge subspace F of C^n.
struct OneHodgeStructure {
  std::size_t rank = 0;
  Subspace w;  // rational basis
  Subspace f;
};

/// Subspace spanned by the complex conjugates of the basis.
Subspace conj(const Subspace& s);
bool is_real_vector(const Vec& v);
bool is_rational_vector(const Vec& v);

struct HodgePieces {
  Subspace h10;
  Subspace h01;
  Subspace h11;
};

/// H10 = F cap W_C, H01 = conj(F) cap W_C, H11 = F cap conj(F), after checking
/// W_C = H10 + H01 (direct) and C^n = W_C + F. Raises NotOpposed.
HodgePieces validate_hodge(const OneHodgeStructure& h);

/// W plus the bigrading.
struct HodgeBigrading {
  Subspace w;
  HodgePieces pieces;
};

/// W, a complex structure on W_R and a real complement of W_R.
struct HodgeComplexStructure {
  Subspace w;
  /// Action on W-coordinates (rows of w.basis()); J^2 = -1.
  Matrix j;
  /// Real spanning vectors of H11_R.
  std::vector<Vec> h11_real;
};

HodgeBigrading to_bigrading(const OneHodgeStructure& h);
/// Jw = i(h - conj h) where h is the H10 component of w.
HodgeComplexStructure to_complex_structure(const HodgeBigrading& b);
/// F = span{w - iJw} + H11_R tensor C.
OneHodgeStructure from_complex_structure(const HodgeComplexStructure& c);

struct RoundTrip {
  HodgeBigrading bigrading;
  HodgeComplexStructure complex_structure;
  OneHodgeStructure reconstructed;
  bool fixpoint = false;
};

RoundTrip roundtrip_formats(const OneHodgeStructure& h);

/// Restriction (Lambda cap K, W cap K, F cap K_C) written in coordinates of the
/// RREF basis of K.
OneHodgeStructure restrict_to(const OneHodgeStructure& h, const Subspace& k);

/// W cap K is J-stable and K_R = (W cap K)_R + (H11_R cap K_R). Cross-checked
/// against validate_hodge on the restriction (InvariantViolation if they differ).
bool is_sub_hodge(const OneHodgeStructure& h, const Subspace& k);

struct TorusPresentation {
  std::size_t dim = 0;  // dim_C F
  /// Row j: image of the j-th dual basis vector in F^* (coordinates in the F basis).
  Matrix periods;
  std::size_t complex_rank = 0;
  std::size_t real_rank = 0;
  std::size_t compact_dim = 0;  // dim H10
  std::size_t affine_dim = 0;   // dim H11
};

/// Raises NotOpposed if the period lattice is not of full rank.
TorusPresentation jacobian_torus(const OneHodgeStructure& h);

/// Real vector (Re v, Im v) in K^{2n}.
Vec realify(const Vec& v);
/// Real span of complex vectors, as a subspace of K^{2n}.
Subspace real_span(std::size_t n, const std::vector<Vec>& vectors);
/// A complex subspace viewed as a real one (spanned by v and iv).
Subspace realified(const Subspace& s);

/// C^n = R1 + R2 + R3 as real subspaces, given by real spanning sets.
struct AdmissibleDecomposition {
  std::size_t n = 0;
  std::vector<Vec> r1, r2, r3;
  std::size_t dim_r1() const;
  std::size_t dim_r2() const;
  std::size_t dim_r3() const;
};

struct AdmissibilityReport {
  bool direct_sum = false;        // C^n = R1 + R2 + R3
  bool doubled_direct_sum = false;  // C^n = R1 + conj R1 + R2 + iR2
  bool r3_totally_real = false;    // R3 cap iR3 = 0
  bool dimensions = false;         // dim R1 + dim R2 = dim R3 = n
  bool ok() const { return direct_sum && doubled_direct_sum && r3_totally_real && dimensions; }
};

AdmissibilityReport check_admissible(const AdmissibleDecomposition& d);

/// R1 = H10, R2 = H11_R, R3 = i Lambda_R.
AdmissibleDecomposition standard_admissible(const OneHodgeStructure& h);

/// Verifies S in T, T = sum (T cap R_i), T cap (R1 + R2) in S, S = conj S
/// (PreconditionFailed otherwise) and returns S == T.
bool check_subspace_rigidity(const Subspace& s, const Subspace& t, const AdmissibleDecomposition& d);

}  // namespace jumploci
