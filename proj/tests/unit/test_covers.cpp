#include "doctest.h"

#include <numeric>

#include "corpus.hpp"
#include "jumploci/covers.hpp"
#include "jumploci/errors.hpp"

using jumploci::Cyclo;
using jumploci::ErrorCode;
using jumploci::MuNCover;
using jumploci::TriangulatedCurve;

namespace {

// All vectors in (Z/n)^len.
std::vector<std::vector<long>> all_values(std::size_t len, long n) {
  std::vector<std::vector<long>> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& v : out)
      for (long k = 0; k < n; ++k) {
        auto w = v;
        w.push_back(k);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

template <class F>
ErrorCode failure(F f) {
  try {
    f();
  } catch (const jumploci::Error& e) {
    return e.code();
  }
  return ErrorCode::Unsupported;  // stands for "nothing thrown"; never expected below
}

long long vertex_count(const TriangulatedCurve& c) { return static_cast<long long>(c.open_curve().vertices.size()); }
long long edge_count(const TriangulatedCurve& c) { return static_cast<long long>(c.open_curve().edges.size()); }
long long face_count(const TriangulatedCurve& c) { return static_cast<long long>(c.open_curve().faces.size()); }

// Lifts of a vertex with isotropy e carry a rho-invariant vector iff rho is trivial on the stabilizer.
std::size_t expected_s0(const MuNCover& cover, long r) {
  const auto n = static_cast<long>(cover.order());
  const auto& branch = cover.base().branch_vertices();
  std::size_t dim = cover.base().open_curve().vertices.size() - branch.size();
  for (auto v : branch) {
    const long e = static_cast<long>(cover.isotropy().at(v));
    if ((r * (n / e)) % n == 0) ++dim;
  }
  return dim;
}

// Riemann-Hurwitz for the open curve.
long expected_total_euler(const MuNCover& cover) {
  const auto n = static_cast<long>(cover.order());
  long chi = n * cover.base().euler_characteristic();
  for (auto v : cover.base().branch_vertices()) chi -= n - n / static_cast<long>(cover.isotropy().at(v));
  return chi;
}

void check_cover(const MuNCover& cover, const std::vector<Cyclo>& xi) {
  const auto n = static_cast<long>(cover.order());
  const auto& base = cover.base();
  const auto total = jumploci::total_dims(cover, xi);
  CHECK(total.euler() == expected_total_euler(cover));
  CHECK(total.cochains[1] == static_cast<std::size_t>(n * edge_count(base)));
  CHECK(total.cochains[2] == static_cast<std::size_t>(n * face_count(base)));
  CHECK(total.cohomology[2] == 0);
  std::array<std::size_t, 3> cochains{}, cohomology{};
  for (long r = 0; r < n; ++r) {
    const auto iso = jumploci::isotypic_dims(cover, xi, r);
    CHECK(iso.cochains[0] == expected_s0(cover, r));
    CHECK(iso.cochains[1] == static_cast<std::size_t>(edge_count(base)));
    CHECK(iso.cochains[2] == static_cast<std::size_t>(face_count(base)));
    CHECK(iso.euler() < 0);
    CHECK(iso.cohomology[1] >= 1);
    CHECK(jumploci::check_negative_euler(cover, xi, r));
    for (std::size_t i = 0; i < 3; ++i) {
      cochains[i] += iso.cochains[i];
      cohomology[i] += iso.cohomology[i];
    }
  }
  CHECK(cochains == total.cochains);
  CHECK(cohomology == total.cohomology);
}

}  // namespace

TEST_CASE("example curves") {
  const auto s = jumploci::thrice_punctured_sphere();
  const auto t = jumploci::once_punctured_torus();
  CHECK(s.euler_characteristic() == -1);
  CHECK(t.euler_characteristic() == -1);
  CHECK(vertex_count(s) - edge_count(s) + face_count(s) == -1);
  CHECK(jumploci::homology_basis(s.open_curve()).rank == 2);
  CHECK(jumploci::homology_basis(t.open_curve()).rank == 2);
  CHECK(jumploci::annulus().euler_characteristic() == 0);
  CHECK(jumploci::triangulated_circle(5).euler_characteristic() == 0);
  CHECK(jumploci::homology_basis(jumploci::triangulated_circle(5).open_curve()).rank == 1);

  // removing a further vertex star adds a boundary loop
  const auto sb = s.with_branch_vertices({12});
  CHECK(jumploci::homology_basis(sb.unbranched_part()).rank == 3);
  CHECK(sb.unbranched_part().euler_characteristic() == -2);
  const auto tb = t.with_branch_vertices({7});
  CHECK(jumploci::homology_basis(tb.unbranched_part()).rank == 3);
}

TEST_CASE("homology basis coordinates are cocycles") {
  for (const auto& c : {jumploci::thrice_punctured_sphere(), jumploci::once_punctured_torus()}) {
    const auto& k = c.open_curve();
    const auto h = jumploci::homology_basis(k);
    for (const auto& f : k.faces) {
      const auto ab = k.edge_index(f[0], f[1]), bc = k.edge_index(f[1], f[2]), ac = k.edge_index(f[0], f[2]);
      for (std::size_t j = 0; j < h.rank; ++j)
        CHECK(h.edge_coords[ab][j] + h.edge_coords[bc][j] - h.edge_coords[ac][j] == 0);
    }
  }
}

TEST_CASE("cover construction") {
  const auto s = jumploci::thrice_punctured_sphere();
  const auto m = jumploci::monodromy_from_homology(s, 3, {1, 2});
  const auto cover = jumploci::build_cover(s, 3, m);
  CHECK(cover.vertices().size() == 3 * s.open_curve().vertices.size());
  CHECK(cover.edges().size() == 3 * s.open_curve().edges.size());
  CHECK(cover.faces().size() == 3 * s.open_curve().faces.size());
  // the generator has order dividing N on every kind of simplex
  for (const auto& perm : cover.action()) {
    for (std::size_t x = 0; x < perm.size(); ++x) {
      std::size_t y = x;
      for (int k = 0; k < 3; ++k) y = perm[y];
      CHECK(y == x);
    }
  }

  // a jump by one along a single edge of a face breaks the cocycle condition
  auto broken = m;
  const auto& f = s.unbranched_part().faces.front();
  const auto e = s.unbranched_part().edge_index(f[0], f[1]);
  broken[e] = (broken[e] + 1) % 3;
  CHECK(failure([&] { jumploci::build_cover(s, 3, broken); }) == ErrorCode::InconsistentMonodromy);
  CHECK(failure([&] { jumploci::build_cover(s, 3, {0}); }) == ErrorCode::DimensionMismatch);
  // adjacent or punctured branch vertices
  auto branched = [&](std::vector<std::size_t> b) {
    const auto c = s.with_branch_vertices(std::move(b));
    jumploci::build_cover(c, 2, std::vector<long>(c.unbranched_part().edges.size(), 0));
  };
  CHECK(failure([&] { branched({12, 9}); }) == ErrorCode::PreconditionFailed);
  CHECK(failure([&] { branched({0}); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("branched double cover of the sphere") {
  const auto c = jumploci::thrice_punctured_sphere().with_branch_vertices({12});
  const std::vector<Cyclo> trivial(c.open_curve().edges.size(), Cyclo(1));
  bool seen_branched = false;
  for (const auto& values : all_values(3, 2)) {
    const auto cover = jumploci::build_cover(c, 2, jumploci::monodromy_from_homology(c, 2, values));
    const std::size_t e = cover.isotropy().at(12);
    CHECK((e == 1 || e == 2));
    seen_branched = seen_branched || e == 2;
    check_cover(cover, trivial);
    // components: N / |subgroup generated by the values|
    const long comps = std::gcd(2L, std::gcd(values[0], std::gcd(values[1], values[2])));
    const auto total = jumploci::total_dims(cover, trivial);
    CHECK(static_cast<long>(total.cohomology[0]) == comps);
    if (e == 2) {
      CHECK(comps == 1);
      CHECK(total.cohomology == std::array<std::size_t, 3>{1, 4, 0});
    }
  }
  CHECK(seen_branched);
}

TEST_CASE("isotypic decomposition over all monodromies") {
  for (const auto& curve : {jumploci::thrice_punctured_sphere(), jumploci::once_punctured_torus()}) {
    const std::size_t bv = curve.vertex_count() - 1;  // the subdivision vertex
    const auto c = curve.with_branch_vertices({bv});
    for (std::size_t n = 2; n <= 3; ++n)
      for (const auto& values : all_values(3, static_cast<long>(n))) {
        const auto cover = jumploci::build_cover(c, n, jumploci::monodromy_from_homology(c, n, values));
        for (const Cyclo& x : {Cyclo(1), Cyclo(-1), Cyclo::zeta(4)}) {
          const auto xi = jumploci::local_system_from_homology(c, {x, Cyclo(1)});
          check_cover(cover, xi);
        }
      }
  }
}

TEST_CASE("negative Euler check needs a hyperbolic base") {
  const auto a = jumploci::annulus();
  const auto cover = jumploci::build_cover(a, 2, jumploci::monodromy_from_homology(a, 2, {1}));
  const std::vector<Cyclo> trivial(a.open_curve().edges.size(), Cyclo(1));
  CHECK_THROWS_AS(jumploci::check_negative_euler(cover, trivial, 0), jumploci::Error);
  // Euler characteristic zero forces equal dimensions in every degree
  const auto iso = jumploci::isotypic_dims(cover, trivial, 1);
  CHECK(iso.euler() == 0);
}
