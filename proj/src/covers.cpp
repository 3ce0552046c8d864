#include "jumploci/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jumploci/errors.hpp"
#include "jumploci/integer_lattice.hpp"
#include "jumploci/linalg.hpp"

namespace jumploci {

namespace {

Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Face make_face(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

bool touches(const std::vector<std::size_t>& set, std::size_t v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

long mod(long a, long n) { return ((a % n) + n) % n; }

TriangulatedCurve subdivided(std::size_t vertex_count, std::vector<Face> faces, const Face& target,
                             std::vector<std::size_t> punctures) {
  const Face t = make_face(target);
  auto it = std::find(faces.begin(), faces.end(), t);
  require(it != faces.end(), ErrorCode::PreconditionFailed, "face to subdivide is missing");
  faces.erase(it);
  const std::size_t v = vertex_count;
  faces.push_back(make_face({t[0], t[1], v}));
  faces.push_back(make_face({t[0], t[2], v}));
  faces.push_back(make_face({t[1], t[2], v}));
  return TriangulatedCurve(vertex_count + 1, std::move(faces), {}, std::move(punctures));
}

}  // namespace

int SimplicialPiece::euler_characteristic() const {
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
}

std::size_t SimplicialPiece::edge_index(std::size_t a, std::size_t b) const {
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  require(it != edges.end() && *it == e, ErrorCode::PreconditionFailed, "edge not in complex");
  return static_cast<std::size_t>(it - edges.begin());
}

SimplicialPiece SimplicialPiece::without_stars(const std::vector<std::size_t>& removed) const {
  SimplicialPiece out;
  for (auto v : vertices)
    if (!touches(removed, v)) out.vertices.push_back(v);
  for (const auto& e : edges)
    if (!touches(removed, e[0]) && !touches(removed, e[1])) out.edges.push_back(e);
  for (const auto& f : faces)
    if (!touches(removed, f[0]) && !touches(removed, f[1]) && !touches(removed, f[2])) out.faces.push_back(f);
  return out;
}

HomologyBasis homology_basis(const SimplicialPiece& k) {
  const std::size_t nv = k.vertices.empty() ? 0 : *std::max_element(k.vertices.begin(), k.vertices.end()) + 1;
  UnionFind uf(nv);
  std::vector<long> column(k.edges.size(), -1);
  std::size_t q = 0;
  for (std::size_t e = 0; e < k.edges.size(); ++e)
    if (!uf.unite(k.edges[e][0], k.edges[e][1])) column[e] = static_cast<long>(q++);

  HomologyBasis out;
  out.edge_coords.assign(k.edges.size(), {});
  if (q == 0) return out;

  // face boundary bc - ac + ab in fundamental-cycle coordinates
  IntMatrix rel;
  for (const auto& f : k.faces) {
    IntVec row(q, 0);
    const std::pair<Edge, long long> parts[] = {{{f[1], f[2]}, 1}, {{f[0], f[2]}, -1}, {{f[0], f[1]}, 1}};
    for (const auto& [e, s] : parts) {
      const long c = column[k.edge_index(e[0], e[1])];
      if (c >= 0) row[static_cast<std::size_t>(c)] += s;
    }
    rel.push_back(std::move(row));
  }
  std::size_t rank = 0;
  IntMatrix v;
  if (rel.empty()) {
    v.assign(q, IntVec(q, 0));
    for (std::size_t i = 0; i < q; ++i) v[i][i] = 1;
  } else {
    SmithForm s = smith_normal_form(rel, q);
    for (auto d : s.invariants) require(d == 1, ErrorCode::Unsupported, "first homology has torsion");
    rank = s.rank;
    v = s.v;
  }
  // functionals on cycle coordinates killing the face relations: columns of V past the rank
  out.rank = q - rank;
  for (std::size_t e = 0; e < k.edges.size(); ++e) {
    std::vector<long long> c(out.rank, 0);
    if (column[e] >= 0)
      for (std::size_t g = 0; g < out.rank; ++g) c[g] = v[static_cast<std::size_t>(column[e])][rank + g];
    out.edge_coords[e] = std::move(c);
  }
  return out;
}

TriangulatedCurve::TriangulatedCurve(std::size_t vertex_count, std::vector<Face> faces, std::vector<Edge> extra_edges,
                                     std::vector<std::size_t> punctures, std::vector<std::size_t> branch_vertices)
    : vertex_count_(vertex_count), punctures_(std::move(punctures)), branch_(std::move(branch_vertices)) {
  std::set<Face> fs;
  for (auto f : faces) {
    f = make_face(f);
    require(f[2] < vertex_count && f[0] != f[1] && f[1] != f[2], ErrorCode::PreconditionFailed, "invalid face");
    require(fs.insert(f).second, ErrorCode::PreconditionFailed, "duplicate face");
  }
  faces_.assign(fs.begin(), fs.end());
  std::map<Edge, int> incidence;
  for (const auto& f : faces_) {
    ++incidence[{f[0], f[1]}];
    ++incidence[{f[1], f[2]}];
    ++incidence[{f[0], f[2]}];
  }
  for (const auto& e : extra_edges) {
    require(e[0] != e[1] && e[0] < vertex_count && e[1] < vertex_count, ErrorCode::PreconditionFailed, "invalid edge");
    incidence.try_emplace(make_edge(e[0], e[1]), 0);
  }
  for (const auto& [e, n] : incidence) {
    require(n <= 2, ErrorCode::PreconditionFailed, "edge lies on more than two faces");
    edges_.push_back(e);
  }
  for (auto v : punctures_) require(v < vertex_count, ErrorCode::PreconditionFailed, "puncture out of range");
  for (auto v : branch_) {
    require(v < vertex_count, ErrorCode::PreconditionFailed, "branch vertex out of range");
    require(!touches(punctures_, v), ErrorCode::PreconditionFailed, "branch vertex is a puncture");
  }

  SimplicialPiece full;
  full.vertices.resize(vertex_count);
  std::iota(full.vertices.begin(), full.vertices.end(), 0);
  full.edges = edges_;
  full.faces = faces_;
  open_ = full.without_stars(punctures_);

  for (auto x : branch_) {
    std::size_t neighbors = 0;
    for (const auto& e : edges_)
      if (e[0] == x || e[1] == x) {
        ++neighbors;
        const std::size_t y = e[0] == x ? e[1] : e[0];
        require(!touches(punctures_, y), ErrorCode::PreconditionFailed, "branch vertex star meets a puncture");
        require(!touches(branch_, y), ErrorCode::PreconditionFailed, "branch vertices are adjacent");
      }
    require(neighbors > 0, ErrorCode::PreconditionFailed, "branch vertex is isolated");
  }
  unbranched_ = open_.without_stars(branch_);
}

TriangulatedCurve TriangulatedCurve::with_branch_vertices(std::vector<std::size_t> branch) const {
  return TriangulatedCurve(vertex_count_, faces_, edges_, punctures_, std::move(branch));
}

TriangulatedCurve thrice_punctured_sphere() {
  std::vector<Face> faces;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t u = 1 + i, u1 = 1 + (i + 1) % 5, l = 6 + i, l1 = 6 + (i + 1) % 5;
    faces.push_back(make_face({0, u, u1}));
    faces.push_back(make_face({11, l, l1}));
    faces.push_back(make_face({u, u1, l}));
    faces.push_back(make_face({u1, l, l1}));
  }
  return subdivided(12, std::move(faces), {9, 10, 11}, {0, 6, 8});
}

TriangulatedCurve once_punctured_torus() {
  std::vector<Face> faces;
  for (std::size_t i = 0; i < 7; ++i) {
    faces.push_back(make_face({i, (i + 1) % 7, (i + 3) % 7}));
    faces.push_back(make_face({i, (i + 2) % 7, (i + 3) % 7}));
  }
  return subdivided(7, std::move(faces), {1, 2, 4}, {0});
}

TriangulatedCurve annulus() {
  std::vector<Face> faces;
  for (std::size_t i = 0; i < 4; ++i) {
    faces.push_back(make_face({0, 1 + i, 1 + (i + 1) % 4}));
    faces.push_back(make_face({5, 1 + i, 1 + (i + 1) % 4}));
  }
  return TriangulatedCurve(6, std::move(faces), {}, {0, 5});
}

TriangulatedCurve triangulated_circle(std::size_t n) {
  require(n >= 3, ErrorCode::PreconditionFailed, "circle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return TriangulatedCurve(n, {}, std::move(edges));
}

std::vector<long> monodromy_from_homology(const TriangulatedCurve& c, std::size_t n, const std::vector<long>& values) {
  const HomologyBasis h = homology_basis(c.unbranched_part());
  require(values.size() == h.rank, ErrorCode::DimensionMismatch, "one monodromy value per homology generator");
  std::vector<long> out;
  for (const auto& coords : h.edge_coords) {
    long s = 0;
    for (std::size_t k = 0; k < coords.size(); ++k) s = mod(s + static_cast<long>(coords[k]) * values[k], static_cast<long>(n));
    out.push_back(s);
  }
  return out;
}

std::vector<Cyclo> local_system_from_homology(const TriangulatedCurve& c, const std::vector<Cyclo>& xi) {
  const HomologyBasis h = homology_basis(c.open_curve());
  require(xi.size() == h.rank, ErrorCode::DimensionMismatch, "one value per homology generator");
  std::vector<Cyclo> out;
  for (const auto& coords : h.edge_coords) {
    Cyclo v(1);
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) v *= xi[k].pow(static_cast<long>(coords[k]));
    out.push_back(std::move(v));
  }
  return out;
}

MuNCover build_cover(const TriangulatedCurve& c, std::size_t n, std::vector<long> monodromy) {
  require(n >= 1, ErrorCode::PreconditionFailed, "N must be positive");
  const SimplicialPiece& open = c.open_curve();
  const SimplicialPiece& un = c.unbranched_part();
  require(monodromy.size() == un.edges.size(), ErrorCode::DimensionMismatch, "one monodromy value per edge");
  const long nn = static_cast<long>(n);
  for (auto& m : monodromy) m = mod(m, nn);
  auto m_of = [&](std::size_t a, std::size_t b) { return monodromy[un.edge_index(a, b)]; };
  for (const auto& f : un.faces)
    require(mod(m_of(f[0], f[1]) + m_of(f[1], f[2]) - m_of(f[0], f[2]), nn) == 0, ErrorCode::InconsistentMonodromy,
            "monodromy is not a cocycle around a face");

  MuNCover cover(c, n);
  cover.monodromy_ = monodromy;
  const auto& branch = c.branch_vertices();

  // lifted vertices over unbranched vertices: (v, h)
  std::map<std::pair<std::size_t, long>, std::size_t> vid;
  for (auto v : un.vertices) {
    cover.isotropy_[v] = 1;
    for (long h = 0; h < nn; ++h) {
      vid[{v, h}] = cover.vertices_.size();
      cover.vertices_.push_back({v, h});
    }
  }
  // lifts of a branch vertex are the components of its lifted link
  std::map<std::size_t, std::map<std::pair<std::size_t, long>, std::size_t>> branch_lift;
  for (auto x : branch) {
    std::vector<std::size_t> nbrs;
    for (const auto& e : open.edges)
      if (e[0] == x || e[1] == x) nbrs.push_back(e[0] == x ? e[1] : e[0]);
    std::map<std::pair<std::size_t, long>, std::size_t> local;
    for (auto y : nbrs)
      for (long h = 0; h < nn; ++h) local.emplace(std::make_pair(y, h), local.size());
    UnionFind uf(local.size());
    for (const auto& f : open.faces) {
      if (!touches({f[0], f[1], f[2]}, x)) continue;
      std::size_t y = f[0] == x ? f[1] : f[0];
      std::size_t z = f[2] == x ? f[1] : f[2];
      for (long h = 0; h < nn; ++h) uf.unite(local.at({y, h}), local.at({z, mod(h + m_of(y, z), nn)}));
    }
    // component label = smallest sheet of the first neighbor in it
    std::map<std::size_t, long> label_of_root;
    for (long h = 0; h < nn; ++h) label_of_root.try_emplace(uf.find(local.at({nbrs.front(), h})), h);
    std::map<std::size_t, std::size_t> size;
    for (const auto& [key, id] : local) ++size[uf.find(id)];
    require(label_of_root.size() == size.size(), ErrorCode::InvariantViolation, "lifted link misses a sheet");
    for (const auto& [root, s] : size)
      require(s == size.begin()->second, ErrorCode::InvariantViolation, "lifted link components differ in size");
    std::map<long, std::size_t> lift_id;
    for (const auto& [root, label] : label_of_root) {
      lift_id[label] = cover.vertices_.size();
      cover.vertices_.push_back({x, label});
    }
    for (const auto& [key, id] : local) branch_lift[x][key] = lift_id.at(label_of_root.at(uf.find(id)));
    cover.isotropy_[x] = n / label_of_root.size();
  }
  auto lift_vertex = [&](std::size_t v, long h, std::size_t via) {
    if (touches(branch, v)) return branch_lift.at(v).at({via, mod(h, nn)});
    return vid.at({v, mod(h, nn)});
  };

  // edges: id = base * n + sheet; the sheet lives at the lower unbranched endpoint
  for (std::size_t e = 0; e < open.edges.size(); ++e) {
    const auto [a, b] = open.edges[e];
    for (long h = 0; h < nn; ++h) {
      LiftedEdge le{e, h, 0, 0};
      if (touches(branch, a)) {
        le.head = vid.at({b, h});
        le.tail = lift_vertex(a, h, b);
      } else if (touches(branch, b)) {
        le.tail = vid.at({a, h});
        le.head = lift_vertex(b, h, a);
      } else {
        le.tail = vid.at({a, h});
        le.head = vid.at({b, mod(h + m_of(a, b), nn)});
      }
      cover.edges_.push_back(le);
    }
  }
  auto eid = [&](std::size_t a, std::size_t b, long h) { return open.edge_index(a, b) * n + static_cast<std::size_t>(mod(h, nn)); };
  for (std::size_t fi = 0; fi < open.faces.size(); ++fi) {
    const auto [a, b, cc] = open.faces[fi];
    for (long h = 0; h < nn; ++h) {
      LiftedFace lf{fi, h, {}};
      if (touches(branch, a)) {  // x < y < z
        lf.edges = {eid(a, b, h), eid(b, cc, h), eid(a, cc, h + m_of(b, cc))};
      } else if (touches(branch, b)) {  // y < x < z
        lf.edges = {eid(a, b, h), eid(b, cc, h + m_of(a, cc)), eid(a, cc, h)};
      } else if (touches(branch, cc)) {  // y < z < x
        lf.edges = {eid(a, b, h), eid(b, cc, h + m_of(a, b)), eid(a, cc, h)};
      } else {
        lf.edges = {eid(a, b, h), eid(b, cc, h + m_of(a, b)), eid(a, cc, h)};
      }
      cover.faces_.push_back(lf);
    }
  }

  // deck generator
  auto& [av, ae, af] = cover.action_;
  av.resize(cover.vertices_.size());
  for (std::size_t i = 0; i < cover.vertices_.size(); ++i) {
    const auto& v = cover.vertices_[i];
    if (touches(branch, v.base)) {
      // the component through (y, label) moves to the one through (y, label + 1)
      const auto& lifts = branch_lift.at(v.base);
      std::size_t y = lifts.begin()->first.first;
      av[i] = lifts.at({y, mod(v.label + 1, nn)});
    } else {
      av[i] = vid.at({v.base, mod(v.label + 1, nn)});
    }
  }
  ae.resize(cover.edges_.size());
  for (std::size_t i = 0; i < ae.size(); ++i) ae[i] = (i / n) * n + (i % n + 1) % n;
  af.resize(cover.faces_.size());
  for (std::size_t i = 0; i < af.size(); ++i) af[i] = (i / n) * n + (i % n + 1) % n;

  // checks: simplicial lift, equivariance, free action on edges and faces
  for (const auto& f : cover.faces_) {
    const auto& ab = cover.edges_[f.edges[0]];
    const auto& bc = cover.edges_[f.edges[1]];
    const auto& ac = cover.edges_[f.edges[2]];
    require(ab.tail == ac.tail && ab.head == bc.tail && bc.head == ac.head, ErrorCode::InvariantViolation,
            "lifted face boundary does not close up");
  }
  for (std::size_t i = 0; i < cover.edges_.size(); ++i) {
    const auto& e = cover.edges_[i];
    const auto& g = cover.edges_[ae[i]];
    require(av[e.tail] == g.tail && av[e.head] == g.head, ErrorCode::InvariantViolation, "deck action is not simplicial");
  }
  for (std::size_t i = 0; i < cover.faces_.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k)
      require(ae[cover.faces_[i].edges[k]] == cover.faces_[af[i]].edges[k], ErrorCode::InvariantViolation,
              "deck action is not simplicial");
  for (const auto* perm : {&ae, &af}) {
    std::vector<std::size_t> p = *perm;
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t i = 0; i < p.size(); ++i)
        require(p[i] != i, ErrorCode::InvariantViolation, "deck action is not free on edges and faces");
      for (auto& x : p) x = (*perm)[x];
    }
  }
  return cover;
}

long IsotypicDims::euler() const {
  return static_cast<long>(cohomology[0]) - static_cast<long>(cohomology[1]) + static_cast<long>(cohomology[2]);
}

namespace {

void check_local_system(const SimplicialPiece& open, const std::vector<Cyclo>& xi) {
  require(xi.size() == open.edges.size(), ErrorCode::DimensionMismatch, "one local system value per edge");
  for (const auto& u : xi) require(!u.is_zero(), ErrorCode::PreconditionFailed, "local system value is zero");
  for (const auto& f : open.faces)
    require(xi[open.edge_index(f[0], f[1])] * xi[open.edge_index(f[1], f[2])] == xi[open.edge_index(f[0], f[2])],
            ErrorCode::PreconditionFailed, "local system is not a cocycle around a face");
}

using Cochain = std::map<std::size_t, Cyclo>;

Cyclo value(const Cochain& c, std::size_t i) {
  auto it = c.find(i);
  return it == c.end() ? Cyclo(0) : it->second;
}

/// Twisted coboundary of a sparse cochain evaluated on one lifted simplex.
Cyclo coboundary0(const MuNCover& cov, const std::vector<Cyclo>& xi, const Cochain& c, std::size_t e) {
  const auto& le = cov.edges()[e];
  return xi[le.base] * value(c, le.head) - value(c, le.tail);
}

Cyclo coboundary1(const MuNCover& cov, const std::vector<Cyclo>& xi, const Cochain& c, std::size_t f) {
  const auto& lf = cov.faces()[f];
  const auto& base = cov.base().open_curve();
  const Face& bf = base.faces[lf.base];
  const Cyclo& u = xi[base.edge_index(bf[0], bf[1])];
  return u * value(c, lf.edges[1]) - value(c, lf.edges[2]) + value(c, lf.edges[0]);
}

IsotypicDims dims_from(std::size_t s0, std::size_t s1, std::size_t s2, const Matrix& d0, const Matrix& d1) {
  require((d1 * d0).is_zero(), ErrorCode::InvariantViolation, "twisted coboundary does not square to zero");
  const std::size_t r0 = rank(d0), r1 = rank(d1);
  IsotypicDims out;
  out.cochains = {s0, s1, s2};
  out.cohomology = {s0 - r0, s1 - r0 - r1, s2 - r1};
  const long chain_euler = static_cast<long>(s0) - static_cast<long>(s1) + static_cast<long>(s2);
  require(chain_euler == out.euler(), ErrorCode::InvariantViolation, "Euler characteristics of cochains and cohomology differ");
  return out;
}

}  // namespace

IsotypicDims isotypic_dims(const MuNCover& cov, const std::vector<Cyclo>& xi, long r) {
  const SimplicialPiece& open = cov.base().open_curve();
  check_local_system(open, xi);
  const std::size_t n = cov.order();
  const auto& [av, ae, af] = cov.action();

  // eigenvector sum_k rho(g)^{-k} g^k e_s for one representative per orbit
  auto orbit_vector = [&](const std::vector<std::size_t>& perm, std::size_t s) {
    Cochain c;
    std::size_t cur = s;
    for (std::size_t k = 0; k < n; ++k) {
      c[cur] += Cyclo::zeta(static_cast<unsigned>(n), -r * static_cast<long>(k));
      cur = perm[cur];
    }
    for (auto it = c.begin(); it != c.end();) it = it->second.is_zero() ? c.erase(it) : std::next(it);
    return c;
  };

  std::vector<Cochain> basis0;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < cov.vertices().size(); ++i) {
    if (seen.count(i)) continue;
    for (std::size_t cur = i; seen.insert(cur).second; cur = av[cur]) {
    }
    Cochain c = orbit_vector(av, i);
    if (!c.empty()) basis0.push_back(std::move(c));
  }
  const std::size_t ne = open.edges.size(), nf = open.faces.size();
  Matrix d0(ne, basis0.size());
  for (std::size_t j = 0; j < basis0.size(); ++j)
    for (std::size_t e = 0; e < ne; ++e) d0(e, j) = coboundary0(cov, xi, basis0[j], e * n);
  Matrix d1(nf, ne);
  for (std::size_t e = 0; e < ne; ++e) {
    const Cochain c = orbit_vector(ae, e * n);
    for (std::size_t f = 0; f < nf; ++f) d1(f, e) = coboundary1(cov, xi, c, f * n);
  }
  return dims_from(basis0.size(), ne, nf, d0, d1);
}

IsotypicDims total_dims(const MuNCover& cov, const std::vector<Cyclo>& xi) {
  check_local_system(cov.base().open_curve(), xi);
  const std::size_t nv = cov.vertices().size(), ne = cov.edges().size(), nf = cov.faces().size();
  Matrix d0(ne, nv), d1(nf, ne);
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t e = 0; e < ne; ++e) d0(e, v) = coboundary0(cov, xi, {{v, Cyclo(1)}}, e);
  for (std::size_t e = 0; e < ne; ++e)
    for (std::size_t f = 0; f < nf; ++f) d1(f, e) = coboundary1(cov, xi, {{e, Cyclo(1)}}, f);
  return dims_from(nv, ne, nf, d0, d1);
}

bool check_negative_euler(const MuNCover& cover, const std::vector<Cyclo>& xi, long r) {
  require(cover.base().euler_characteristic() < 0, ErrorCode::PreconditionFailed,
          "curve is not of general type (Euler characteristic >= 0)");
  const IsotypicDims d = isotypic_dims(cover, xi, r);
  return d.euler() < 0 && d.cohomology[1] >= 1;
}

}  // namespace jumploci
