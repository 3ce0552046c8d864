#include "doctest.h"

#include "corpus.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/serialize.hpp"
#include "random.hpp"

using jumploci::Cyclo;
using jumploci::ErrorCode;
using jumploci::Filtration;
using jumploci::Json;

namespace {

template <class F>
ErrorCode failure(F f) {
  try {
    f();
  } catch (const jumploci::Error& e) {
    return e.code();
  }
  return ErrorCode::Unsupported;  // nothing thrown
}

// Equal steps over the union of both ranges.
bool same_filtration(const Filtration& a, const Filtration& b) {
  if (a.num_degrees() != b.num_degrees()) return false;
  const int lo = std::min(a.lo(), b.lo()) - 1, hi = std::max(a.hi(), b.hi()) + 1;
  for (std::size_t n = 0; n < a.num_degrees(); ++n)
    for (int p = lo; p <= hi; ++p)
      if (a.at(n, p) != b.at(n, p)) return false;
  return true;
}

// Text round trip, so the JSON really leaves memory.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("numbers") {
  testsupport::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Cyclo c = testsupport::random_cyclo(rng, 3);
    CHECK(jumploci::cyclo_from_json(reparse(jumploci::to_json(c))) == c);
    jumploci::Rational q(static_cast<long>(rng.range(-50, 50)), static_cast<long>(rng.range(1, 30)));
    q.canonicalize();
    CHECK(jumploci::rational_from_json(reparse(jumploci::to_json(q))) == q);
  }
  CHECK(jumploci::rational_from_json(Json("-3/6")) == jumploci::Rational(-1, 2));
  CHECK(jumploci::rational_from_json(Json(7)) == jumploci::Rational(7));
  CHECK(jumploci::cyclo_from_json(Json("2/3")) == Cyclo(jumploci::Rational(2, 3)));
  CHECK(jumploci::cyclo_from_json(Json::parse(R"({"conductor": 4, "coeffs": [0, 1]})")) == Cyclo::zeta(4));

  CHECK(failure([] { jumploci::rational_from_json(Json("1/0")); }) == ErrorCode::SchemaError);
  CHECK(failure([] { jumploci::rational_from_json(Json("one")); }) == ErrorCode::SchemaError);
  CHECK(failure([] { jumploci::rational_from_json(Json(0.5)); }) == ErrorCode::SchemaError);
  CHECK(failure([] { jumploci::cyclo_from_json(Json::parse(R"({"conductor": 0, "coeffs": []})")); }) ==
        ErrorCode::SchemaError);
  CHECK(failure([] { jumploci::cyclo_from_json(Json::parse(R"({"coeffs": [1]})")); }) == ErrorCode::SchemaError);
}

TEST_CASE("polynomials and matrices") {
  testsupport::Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const std::size_t nvars = 1 + rng.below(3);
    const auto f = testsupport::random_poly(rng, nvars, 4, 3, rng.coin());
    CHECK(jumploci::poly_from_json(reparse(jumploci::to_json(f))) == f);
    const auto m = testsupport::random_invertible(rng, 3, true);
    CHECK(jumploci::matrix_from_json(reparse(jumploci::to_json(m))) == m);
    const jumploci::Subspace s = jumploci::image(m, jumploci::Subspace::span(3, {m.row(0)}));
    CHECK(jumploci::subspace_from_json(reparse(jumploci::to_json(s)), 3) == s);
  }
  const auto g = testsupport::trefoil_group();
  const auto k = jumploci::fox_complex(g);
  const auto back = jumploci::free_complex_from_json(reparse(jumploci::to_json(k)));
  CHECK(back.ranks() == k.ranks());
  for (std::size_t i = 0; i < k.differentials().size(); ++i) CHECK(back.differential(i) == k.differential(i));
  const auto g2 = jumploci::presentation_from_json(reparse(jumploci::to_json(g)));
  CHECK(g2.ngens() == g.ngens());
  CHECK(g2.relators() == g.relators());

  CHECK(failure([] { jumploci::poly_from_json(Json::parse(R"({"vars": 1, "terms": [{"exps": [1, 2], "coeff": 1}]})")); }) ==
        ErrorCode::SchemaError);
  CHECK(failure([] { jumploci::presentation_from_json(Json::parse(R"({"generators": 2, "relators": [[0, 1]]})")); }) ==
        ErrorCode::SchemaError);
  CHECK(failure([] { jumploci::presentation_from_json(Json::parse(R"({"generators": 2, "relators": [[3]]})")); }) ==
        ErrorCode::SchemaError);
}

TEST_CASE("points and subtori") {
  const auto p = jumploci::CharacterPoint({Cyclo::zeta(3), jumploci::Generic{0}, Cyclo(-1)});
  CHECK(jumploci::point_from_json(reparse(jumploci::to_json(p))) == p);
  jumploci::TranslatedSubtorus s;
  s.embed = {{1, 0}, {2, 1}, {0, 3}};
  s.dim = 2;
  s.translate = {Cyclo(1), Cyclo::zeta(4), Cyclo(-1)};
  const auto back = jumploci::subtorus_from_json(reparse(jumploci::to_json(s)));
  CHECK(back.embed == s.embed);
  CHECK(back.dim == s.dim);
  CHECK(back.translate == s.translate);
}

TEST_CASE("hodge structures and certificates") {
  testsupport::Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto inst = testsupport::random_hodge(rng, 6);
    const auto back = jumploci::hodge_from_json(reparse(jumploci::to_json(inst.h)));
    CHECK(back.rank == inst.h.rank);
    CHECK(back.w == inst.h.w);
    CHECK(back.f == inst.h.f);
  }
  const std::vector<jumploci::CertificateComponent> cert{{{{1, 0}, {jumploci::Rational(1, 2), 1}}, {Cyclo(1), Cyclo(-1)}},
                                                         {{}, {Cyclo::zeta(3), Cyclo(1)}}};
  const auto back = jumploci::certificate_from_json(reparse(jumploci::to_json(cert)));
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].sublattice == cert[i].sublattice);
    CHECK(back[i].translate == cert[i].translate);
  }
}

TEST_CASE("filtered complexes and modules") {
  testsupport::Rng rng(14);
  for (int i = 0; i < 10; ++i) {
    const auto k = testsupport::random_chodge(rng, 6);
    const auto back = jumploci::filtered_complex_from_json(reparse(jumploci::to_json(k)));
    CHECK(back.dims() == k.dims());
    CHECK(back.differentials() == k.differentials());
    for (const auto& [name, f] : k.filtrations()) {
      REQUIRE(back.has_filtration(name));
      CHECK(same_filtration(back.filtration(name), f));
    }
  }
  for (int i = 0; i < 5; ++i) {
    const auto a = testsupport::random_module(rng);
    const auto back = jumploci::module_from_json(reparse(jumploci::to_json(a)));
    CHECK(back.holomorphic == a.holomorphic);
    CHECK(back.d1 == a.d1);
    CHECK(back.d2 == a.d2);
    CHECK(back.theta == a.theta);
    CHECK(back.phi == a.phi);
    CHECK(back.psi == a.psi);
    CHECK(same_filtration(back.c, a.c));
    CHECK(same_filtration(back.w, a.w));
  }
  // missing differentials are refused on input
  auto j = jumploci::to_json(testsupport::random_chodge(rng, 6));
  j["differentials"] = Json::array();
  CHECK(failure([&] { jumploci::filtered_complex_from_json(j); }) != ErrorCode::Unsupported);
}

TEST_CASE("curves") {
  for (const auto& c : {jumploci::thrice_punctured_sphere(), jumploci::once_punctured_torus().with_branch_vertices({7})}) {
    const auto back = jumploci::curve_from_json(reparse(jumploci::to_json(c)));
    CHECK(back.vertex_count() == c.vertex_count());
    CHECK(back.all_faces() == c.all_faces());
    CHECK(back.all_edges() == c.all_edges());
    CHECK(back.punctures() == c.punctures());
    CHECK(back.branch_vertices() == c.branch_vertices());
    CHECK(back.euler_characteristic() == c.euler_characteristic());
  }
  CHECK(failure([] { jumploci::curve_from_json(Json::parse(R"({"vertices": 3, "faces": [[0, 1]]})")); }) ==
        ErrorCode::SchemaError);
  // well-formed JSON describing an impossible curve is a precondition failure
  CHECK(failure([] { jumploci::curve_from_json(Json::parse(R"({"vertices": 3, "faces": [[0, 1, 5]]})")); }) ==
        ErrorCode::PreconditionFailed);
}
