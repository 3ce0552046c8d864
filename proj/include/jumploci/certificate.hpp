#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jumploci/hodge.hpp"
#include "jumploci/jump_loci.hpp"

namespace jumploci {

/// Claimed component r * exp(K_C) of a locus.
struct CertificateComponent {
  /// Rational spanning vectors of K inside Q^b (may be empty).
  std::vector<std::vector<Rational>> sublattice;
  /// Algebraic translate with |r_i| = 1.
  std::vector<Cyclo> translate;
};

struct ComponentCheck {
  bool sub_hodge = false;
  bool contained = false;
  TranslatedSubtorus torus;
};

struct CertificateReport {
  std::vector<ComponentCheck> components;
  /// Sampled torsion points lying in the locus, and how many of them some
  /// component covers. Only a sampling check.
  std::size_t samples = 0;
  std::size_t samples_in_locus = 0;
  std::size_t samples_covered = 0;
  bool coverage_partial = true;
  bool pass = false;
};

/// PASS iff every component is a sub-1-Hodge structure and its translated
/// subtorus lies in the locus. Non-unitary translates raise Unsupported.
CertificateReport verify_exp_hodge_certificate(const LocusUnion& l, const OneHodgeStructure& h,
                                               const std::vector<CertificateComponent>& cert, std::uint64_t seed,
                                               std::size_t samples);

/// The subtorus exp(K_C) with E a basis of the saturated lattice Z^b cap K.
TranslatedSubtorus subtorus_of(const std::vector<std::vector<Rational>>& k, std::size_t b,
                               const std::vector<Cyclo>& translate);

/// p in r * image(E): (p / r)^m = 1 for every character m vanishing on E.
bool point_on_subtorus(const TranslatedSubtorus& s, const std::vector<Cyclo>& p);

}  // namespace jumploci
