#include "doctest.h"

#include "corpus.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/filtered_complex.hpp"

using jumploci::Cyclo;
using jumploci::FilteredComplex;
using jumploci::Filtration;
using jumploci::Matrix;
using jumploci::SpaceFiltration;
using jumploci::Subspace;
using jumploci::TriFilteredSpace;
using testsupport::Rng;

namespace {

struct Typed {
  int f, c, weight;
};

// Basis vectors of the given types in the basis given by the columns of g.
TriFilteredSpace typed_space(const std::vector<Typed>& types, const Matrix& g) {
  std::vector<int> fl, cl, wl;
  for (const auto& t : types) {
    fl.push_back(t.f);
    cl.push_back(t.c);
    wl.push_back(-t.weight);
  }
  const Matrix basis = g.transposed();
  return {types.size(), SpaceFiltration::from_levels(basis, wl), SpaceFiltration::from_levels(basis, fl),
          SpaceFiltration::from_levels(basis, cl)};
}

std::vector<Typed> random_types(Rng& rng, std::size_t n) {
  std::vector<Typed> out;
  for (std::size_t k = 0; k < n; ++k) {
    const int w = static_cast<int>(rng.range(0, 2));
    const int a = static_cast<int>(rng.range(0, w));
    out.push_back({a, w - a, w});
  }
  return out;
}

}  // namespace

TEST_CASE("filtrations from levels") {
  const auto f = SpaceFiltration::from_levels(Matrix::identity(3), {0, 1, 1});
  CHECK(f.at(-5).dim() == 3);
  CHECK(f.at(0).dim() == 3);
  CHECK(f.at(1).dim() == 2);
  CHECK(f.at(2).dim() == 0);
  CHECK(f.shifted(1).at(0).dim() == 2);
  const auto s = SpaceFiltration::single_step(2, 4);
  CHECK(s.at(4).dim() == 2);
  CHECK(s.at(5).dim() == 0);
}

TEST_CASE("opposed filtrations") {
  // Hodge decomposition of weight 1: types (1,0), (0,1)
  const auto f = SpaceFiltration::from_levels(Matrix::identity(2), {1, 0});
  const auto c = SpaceFiltration::from_levels(Matrix::identity(2), {0, 1});
  CHECK(jumploci::opposed(f, c, 1));
  CHECK_FALSE(jumploci::opposed(f, c, 2));
  CHECK(jumploci::bigraded_piece_dim(f, c, 1, 0) == 1);
  CHECK(jumploci::bigraded_piece_dim(f, c, 0, 1) == 1);
  CHECK(jumploci::bigraded_piece_dim(f, c, 1, 1) == 0);
  // shifting by (a, b) changes the weight to n - a - b
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) CHECK(jumploci::opposed(f.shifted(a), c.shifted(b), 1 - a - b));
  CHECK_FALSE(jumploci::opposed(f, f, 1));
}

TEST_CASE("mixed structures") {
  Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    const auto types = random_types(rng, 1 + rng.below(5));
    const Matrix g = testsupport::random_invertible(rng, types.size(), rng.coin());
    CHECK(jumploci::check_cmhs(typed_space(types, g)));
    // break one type
    auto bad = types;
    bad[0].c += 1;
    CHECK_FALSE(jumploci::check_cmhs(typed_space(bad, g)));
  }
}

TEST_CASE("random non-opposed pairs") {
  Rng rng(62);
  int rejected = 0;
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + rng.below(3);
    std::vector<int> fl(n), cl(n);
    for (auto& x : fl) x = static_cast<int>(rng.range(0, 2));
    for (auto& x : cl) x = static_cast<int>(rng.range(0, 2));
    bool expect = true;
    for (std::size_t k = 0; k < n; ++k) expect = expect && fl[k] + cl[k] == 2;
    const Matrix g = testsupport::random_invertible(rng, n).transposed();
    const bool got = jumploci::opposed(SpaceFiltration::from_levels(g, fl), SpaceFiltration::from_levels(g, cl), 2);
    CHECK(got == expect);
    if (!got) ++rejected;
  }
  CHECK(rejected > 0);
}

TEST_CASE("strictness of morphisms") {
  Rng rng(63);
  for (int i = 0; i < 40; ++i) {
    const auto t1 = random_types(rng, 1 + rng.below(4));
    const auto t2 = random_types(rng, 1 + rng.below(4));
    Matrix f(t2.size(), t1.size());
    for (std::size_t a = 0; a < t2.size(); ++a)
      for (std::size_t b = 0; b < t1.size(); ++b)
        if (t2[a].f == t1[b].f && t2[a].c == t1[b].c && rng.coin()) f(a, b) = testsupport::random_cyclo(rng, 2);
    const Matrix g1 = testsupport::random_invertible(rng, t1.size()), g2 = testsupport::random_invertible(rng, t2.size());
    const Matrix moved = g2 * f * jumploci::inverse(g1);
    CHECK(jumploci::check_morphism_strict(typed_space(t1, g1), typed_space(t2, g2), moved));
  }
  // a map that raises the Hodge level is not a morphism
  const std::vector<Typed> low{{0, 1, 1}}, high{{1, 0, 1}};
  Matrix one(1, 1);
  one(0, 0) = Cyclo(1);
  CHECK_THROWS_AS(jumploci::check_morphism_strict(typed_space(low, Matrix::identity(1)), typed_space(high, Matrix::identity(1)), one),
                  jumploci::Error);
}

TEST_CASE("spectral sequence of a zero differential") {
  FilteredComplex k({2, 1}, {Matrix(1, 2)});
  k.set_filtration("F", Filtration({SpaceFiltration::from_levels(Matrix::identity(2), {0, 1}),
                                    SpaceFiltration::from_levels(Matrix::identity(1), {0})}));
  const auto ss = jumploci::spectral_sequence(k, "F");
  CHECK(ss.degenerates_at <= 1);
  CHECK(ss.pages.back().dims.at({1, 0}) == 1);
}

TEST_CASE("acyclic two-term complex") {
  Matrix d(1, 1);
  d(0, 0) = Cyclo(1);
  FilteredComplex k({1, 1}, {d});
  k.set_filtration("F", Filtration({SpaceFiltration::from_levels(Matrix::identity(1), {0}),
                                    SpaceFiltration::from_levels(Matrix::identity(1), {1})}));
  const auto ss = jumploci::spectral_sequence(k, "F");
  // E_1^{0,0} and E_1^{1,0} are both one-dimensional, d_1 is an isomorphism
  const auto& e1 = ss.page(1);
  CHECK(e1.dims.at({0, 0}) == 1);
  CHECK(e1.dims.at({1, 1}) == 1);
  CHECK(ss.degenerates_at == 2);
  for (const auto& [key, dim] : ss.page(2).dims) CHECK(dim == 0);
  // same levels: already acyclic on E_1
  k.set_filtration("G", Filtration({SpaceFiltration::from_levels(Matrix::identity(1), {0}),
                                    SpaceFiltration::from_levels(Matrix::identity(1), {0})}));
  CHECK(jumploci::spectral_sequence(k, "G").degenerates_at <= 1);
  // not a subcomplex
  k.set_filtration("H", Filtration({SpaceFiltration::from_levels(Matrix::identity(1), {1}),
                                    SpaceFiltration::from_levels(Matrix::identity(1), {0})}));
  CHECK_FALSE(k.is_stable("H"));
  try {
    (void)jumploci::spectral_sequence(k, "H");
    FAIL("expected an error");
  } catch (const jumploci::Error& e) {
    CHECK(e.code() == jumploci::ErrorCode::FiltrationNotStable);
  }
}

TEST_CASE("torus de Rham model") {
  const auto a = testsupport::torus_module(Cyclo(0));
  FilteredComplex k = jumploci::total_complex(a);
  CHECK(jumploci::check_chodge(k).ok());
  // C equal to F is not opposed
  k.set_filtration("C", k.filtration("F"));
  const auto r = jumploci::check_chodge(k);
  CHECK(r.strict);
  CHECK_FALSE(r.opposed);
}

TEST_CASE("random C-Hodge complexes degenerate at E_2") {
  Rng rng(64);
  for (int i = 0; i < 30; ++i) {
    const FilteredComplex k = testsupport::random_chodge(rng);
    REQUIRE(jumploci::check_chodge(k).ok());
    const auto ss = jumploci::spectral_sequence(k, "W");
    CHECK(ss.degenerates_by(2));
    // E_infinity is the graded cohomology
    const auto h = k.cohomology_dims();
    std::vector<std::size_t> total(k.num_degrees(), 0);
    for (const auto& [key, dim] : ss.pages.back().dims) total[static_cast<std::size_t>(key.second)] += dim;
    CHECK(total == h);
  }
}

TEST_CASE("broken C-Hodge complexes are detected") {
  // pure vector of weight 0 with F + C = 1
  FilteredComplex k({1}, {});
  k.set_filtration("F", Filtration({SpaceFiltration::from_levels(Matrix::identity(1), {1})}));
  k.set_filtration("C", Filtration({SpaceFiltration::from_levels(Matrix::identity(1), {0})}));
  k.set_filtration("W", Filtration({SpaceFiltration::from_levels(Matrix::identity(1), {0})}));
  CHECK_FALSE(jumploci::check_chodge(k).ok());
  k.set_filtration("C", Filtration({SpaceFiltration::from_levels(Matrix::identity(1), {-1})}));
  CHECK(jumploci::check_chodge(k).ok());
}

TEST_CASE("graded pieces and their cohomology") {
  Rng rng(65);
  for (int i = 0; i < 10; ++i) {
    const FilteredComplex k = testsupport::random_chodge(rng);
    // Euler characteristic of Gr_F^p summed over p equals that of the complex
    long total = 0;
    for (int p = k.filtration("F").lo() - 1; p <= k.filtration("F").hi(); ++p) {
      const auto h = jumploci::graded_piece_cohomology(k, "F", p);
      for (std::size_t n = 0; n < h.size(); ++n) total += (n % 2 == 0 ? 1 : -1) * static_cast<long>(h[n]);
    }
    long expected = 0;
    const auto h = k.cohomology_dims();
    for (std::size_t n = 0; n < h.size(); ++n) expected += (n % 2 == 0 ? 1 : -1) * static_cast<long>(h[n]);
    CHECK(total == expected);
  }
}
