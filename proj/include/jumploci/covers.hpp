#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "jumploci/cyclotomic.hpp"

namespace jumploci {

using Edge = std::array<std::size_t, 2>;  // sorted
using Face = std::array<std::size_t, 3>;  // sorted

/// Finite simplicial complex of dimension <= 2 on vertex labels 0..n-1.
struct SimplicialPiece {
  std::vector<std::size_t> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  int euler_characteristic() const;
  std::size_t edge_index(std::size_t a, std::size_t b) const;  // raises PreconditionFailed if absent
  /// Removes the open stars of the given vertices.
  SimplicialPiece without_stars(const std::vector<std::size_t>& removed) const;
};

/// H_1 of a complex with a chosen basis: for each edge (oriented low -> high)
/// the coordinates of its "fundamental class" in the basis, so that a character
/// with values x_k on the basis takes value prod_k x_k^{c_e[k]} on edge e and is
/// trivial around every face. Raises Unsupported if H_1 has torsion.
struct HomologyBasis {
  std::size_t rank = 0;
  std::vector<std::vector<long long>> edge_coords;  // per edge of the complex
};
HomologyBasis homology_basis(const SimplicialPiece& k);

/// Triangulated surface with punctures (deleted open vertex stars) and
/// marked branch vertices. All simplex lists refer to the open curve.
class TriangulatedCurve {
 public:
  /// Edges of the faces are added automatically; `extra_edges` allows 1-dimensional parts.
  TriangulatedCurve(std::size_t vertex_count, std::vector<Face> faces, std::vector<Edge> extra_edges = {},
                    std::vector<std::size_t> punctures = {}, std::vector<std::size_t> branch_vertices = {});

  std::size_t vertex_count() const { return vertex_count_; }
  const SimplicialPiece& open_curve() const { return open_; }
  /// Open curve with the open stars of the branch vertices removed as well.
  const SimplicialPiece& unbranched_part() const { return unbranched_; }
  const std::vector<std::size_t>& punctures() const { return punctures_; }
  const std::vector<std::size_t>& branch_vertices() const { return branch_; }
  /// Of the open curve; equals V - E + F - #punctures for disjoint puncture stars.
  int euler_characteristic() const { return open_.euler_characteristic(); }
  const std::vector<Face>& all_faces() const { return faces_; }
  const std::vector<Edge>& all_edges() const { return edges_; }

  TriangulatedCurve with_branch_vertices(std::vector<std::size_t> branch) const;

 private:
  std::size_t vertex_count_;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> punctures_;
  std::vector<std::size_t> branch_;
  SimplicialPiece open_;
  SimplicialPiece unbranched_;
};

/// Icosahedron with one face subdivided (vertex 12), punctured at three pairwise
/// non-adjacent vertices. Vertex 12 has its closed star inside the open curve.
TriangulatedCurve thrice_punctured_sphere();
/// Seven-vertex torus with one face subdivided (vertex 7), punctured at vertex 0.
TriangulatedCurve once_punctured_torus();
/// Octahedron punctured at two antipodal vertices.
TriangulatedCurve annulus();
/// Boundary of an n-gon (n >= 3).
TriangulatedCurve triangulated_circle(std::size_t n);

struct LiftedVertex {
  std::size_t base = 0;
  long label = 0;  // sheet for unbranched vertices, coset representative otherwise
};
struct LiftedEdge {
  std::size_t base = 0;  // index into unbranched/open edges
  long sheet = 0;
  std::size_t tail = 0;  // lifted vertex over the lower base vertex
  std::size_t head = 0;
};
struct LiftedFace {
  std::size_t base = 0;
  long sheet = 0;
  std::array<std::size_t, 3> edges{};  // lifts of ab, bc, ac for base face (a < b < c)
};

/// mu_N cover of a triangulated curve, branched at most over its branch
/// vertices, given by a Z/N-valued 1-cocycle on the unbranched part
/// (value k on edge a < b means the sheet moves by k from a to b).
class MuNCover {
 public:
  std::size_t order() const { return n_; }
  const TriangulatedCurve& base() const { return curve_; }
  const std::vector<long>& monodromy() const { return monodromy_; }
  const std::vector<LiftedVertex>& vertices() const { return vertices_; }
  const std::vector<LiftedEdge>& edges() const { return edges_; }
  const std::vector<LiftedFace>& faces() const { return faces_; }
  /// Order of the stabilizer of a lift of each base vertex of the open curve.
  const std::map<std::size_t, std::size_t>& isotropy() const { return isotropy_; }
  /// Action of the generator of mu_N as permutations of lifted simplices.
  const std::array<std::vector<std::size_t>, 3>& action() const { return action_; }

  friend MuNCover build_cover(const TriangulatedCurve& c, std::size_t n, std::vector<long> monodromy);

 private:
  MuNCover(TriangulatedCurve c, std::size_t n) : curve_(std::move(c)), n_(n) {}
  TriangulatedCurve curve_;
  std::size_t n_;
  std::vector<long> monodromy_;
  std::vector<LiftedVertex> vertices_;
  std::vector<LiftedEdge> edges_;
  std::vector<LiftedFace> faces_;
  std::map<std::size_t, std::size_t> isotropy_;
  std::array<std::vector<std::size_t>, 3> action_;
};

/// `monodromy` has one value per edge of c.unbranched_part(). Raises
/// InconsistentMonodromy if it is not a cocycle mod N, PreconditionFailed if
/// branch vertices are adjacent, punctured or have a star leaving the curve.
/// Verifies the lift (free action on edges and faces, boundary of boundary)
/// and raises InvariantViolation otherwise.
MuNCover build_cover(const TriangulatedCurve& c, std::size_t n, std::vector<long> monodromy);
/// Cocycle with the given values (mod N) on the homology basis of the unbranched part.
std::vector<long> monodromy_from_homology(const TriangulatedCurve& c, std::size_t n, const std::vector<long>& values);

/// Multiplicative edge cocycle of the open curve with values xi_k on its homology basis.
std::vector<Cyclo> local_system_from_homology(const TriangulatedCurve& c, const std::vector<Cyclo>& xi);

struct IsotypicDims {
  std::array<std::size_t, 3> cochains{};    // dim_rho S^i
  std::array<std::size_t, 3> cohomology{};  // dim_rho H^i
  long euler() const;                       // signed sum, equal on both sides
};

/// rho(g) = zeta_N^r for the generator g. `xi` is an edge cocycle on the open
/// curve (see local_system_from_homology). Computed on the rho-isotypic
/// subcomplex of the simplicial cochains of the cover with coefficients in
/// the pulled back local system.
IsotypicDims isotypic_dims(const MuNCover& cover, const std::vector<Cyclo>& xi, long r);

/// Total cochain and cohomology dimensions of the cover (no projection).
IsotypicDims total_dims(const MuNCover& cover, const std::vector<Cyclo>& xi);

/// e_rho < 0 and dim_rho H^1 >= 1. Raises PreconditionFailed if chi(C) >= 0.
bool check_negative_euler(const MuNCover& cover, const std::vector<Cyclo>& xi, long r);

}  // namespace jumploci
