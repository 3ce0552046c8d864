#include "jumploci/serialize.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

namespace {

void expect(bool cond, const std::string& what) { require(cond, ErrorCode::SchemaError, what); }

const Json& field(const Json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from(const Json& j, const char* what) {
  expect(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0),
         std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

long long int_from(const Json& j, const char* what) {
  expect(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<long long>();
}

const Json& array_from(const Json& j, const char* what) {
  expect(j.is_array(), std::string(what) + " must be an array");
  return j;
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vec vec_from(const Json& j, std::size_t n) {
  array_from(j, "vector");
  expect(j.size() == n, "vector has wrong length");
  Vec v;
  for (const auto& x : j) v.push_back(cyclo_from_json(x));
  return v;
}

Json matrices_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

std::vector<Matrix> matrices_from(const Json& j, const std::vector<std::size_t>& dims, std::size_t shift,
                                  const char* what) {
  array_from(j, what);
  const std::size_t count = dims.size() >= shift ? dims.size() - shift : 0;
  expect(j.size() == count, std::string("wrong number of blocks for ") + what);
  std::vector<Matrix> out;
  for (std::size_t n = 0; n < count; ++n) {
    Matrix m = matrix_from_json(j[n]);
    if (m.rows() == 0 && m.cols() == 0) m = Matrix(dims[n + shift], dims[n]);
    expect(m.rows() == dims[n + shift] && m.cols() == dims[n], std::string("wrong block shape for ") + what);
    out.push_back(std::move(m));
  }
  return out;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::SchemaError, e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  expect(j.is_string(), "rational must be an integer or a string p/q");
  Rational q;
  expect(q.set_str(j.get<std::string>(), 10) == 0, "malformed rational '" + j.get<std::string>() + "'");
  expect(q.get_den() != 0, "rational with zero denominator");
  q.canonicalize();
  return q;
}

Json to_json(const Cyclo& c) {
  if (c.is_rational()) return to_json(c.rational_value());
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const Json& j) {
  if (!j.is_object()) return Cyclo(rational_from_json(j));
  const std::size_t n = size_from(field(j, "conductor"), "conductor");
  expect(n >= 1 && n <= 100000, "conductor out of range");
  std::vector<Rational> coeffs;
  for (const auto& x : array_from(field(j, "coeffs"), "coeffs")) coeffs.push_back(rational_from_json(x));
  return Cyclo(static_cast<unsigned>(n), std::move(coeffs));
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exps", e}, {"coeff", to_json(c)}});
  return Json{{"vars", f.nvars()}, {"terms", terms}, {"text", f.to_string()}};
}

LaurentPoly poly_from_json(const Json& j) {
  const std::size_t b = size_from(field(j, "vars"), "vars");
  LaurentPoly f(b);
  for (const auto& t : array_from(field(j, "terms"), "terms")) {
    Exponent e;
    for (const auto& x : array_from(field(t, "exps"), "exps")) e.push_back(static_cast<int>(int_from(x, "exponent")));
    expect(e.size() == b, "exponent vector has wrong length");
    f.add_term(e, cyclo_from_json(field(t, "coeff")));
  }
  return f;
}

Json to_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RingMatrix ring_matrix_from_json(const Json& j, std::size_t nvars) {
  const std::size_t r = size_from(field(j, "rows"), "rows"), c = size_from(field(j, "cols"), "cols");
  const Json& rows = array_from(field(j, "entries"), "entries");
  expect(rows.size() == r, "matrix has wrong number of rows");
  RingMatrix m(r, c, nvars);
  for (std::size_t i = 0; i < r; ++i) {
    expect(rows[i].is_array() && rows[i].size() == c, "matrix row has wrong length");
    for (std::size_t k = 0; k < c; ++k) {
      LaurentPoly f = poly_from_json(rows[i][k]);
      expect(f.nvars() == nvars, "entry has wrong number of variables");
      m.set(i, k, std::move(f));
    }
  }
  return m;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.row_data()) rows.push_back(vec_json(r));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t r = size_from(field(j, "rows"), "rows"), c = size_from(field(j, "cols"), "cols");
  Matrix m(r, c);
  if (!j.contains("entries")) return m;  // zero matrix
  const Json& rows = array_from(j.at("entries"), "entries");
  expect(rows.size() == r, "matrix has wrong number of rows");
  for (std::size_t i = 0; i < r; ++i) m.row(i) = vec_from(rows[i], c);
  return m;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& r : s.basis().row_data()) basis.push_back(vec_json(r));
  return basis;
}

Subspace subspace_from_json(const Json& j, std::size_t ambient) {
  std::vector<Vec> rows;
  for (const auto& r : array_from(j, "subspace")) rows.push_back(vec_from(r, ambient));
  return Subspace::span(ambient, rows);
}

Json to_json(const GroupPresentation& g) {
  Json rels = Json::array();
  for (const auto& w : g.relators()) {
    Json word = Json::array();
    for (const auto& [x, e] : w) word.push_back(e * static_cast<long long>(x + 1));
    rels.push_back(std::move(word));
  }
  return Json{{"generators", g.ngens()}, {"relators", rels}};
}

GroupPresentation presentation_from_json(const Json& j) {
  const std::size_t n = size_from(field(j, "generators"), "generators");
  std::vector<Word> rels;
  for (const auto& w : array_from(field(j, "relators"), "relators")) {
    Word word;
    for (const auto& x : array_from(w, "relator")) {
      const long long v = int_from(x, "letter");
      expect(v != 0 && static_cast<std::size_t>(std::llabs(v)) <= n, "letter out of range");
      word.emplace_back(static_cast<std::size_t>(std::llabs(v) - 1), v > 0 ? 1 : -1);
    }
    rels.push_back(std::move(word));
  }
  return GroupPresentation(n, std::move(rels));
}

Json to_json(const CoverDatum& c) {
  Json cocycle = Json::array();
  for (const auto& [ab, m] : c.cocycle) cocycle.push_back({{"edge", {ab.first, ab.second}}, {"matrix", to_json(m)}});
  return Json{{"sets", c.nsets}, {"rank", c.rank}, {"vars", c.nvars}, {"nerve", c.nerve}, {"cocycle", cocycle}};
}

CoverDatum cover_datum_from_json(const Json& j) {
  CoverDatum c;
  c.nsets = size_from(field(j, "sets"), "sets");
  c.rank = size_from(field(j, "rank"), "rank");
  c.nvars = size_from(field(j, "vars"), "vars");
  for (const auto& s : array_from(field(j, "nerve"), "nerve")) {
    std::vector<std::size_t> simplex;
    for (const auto& x : array_from(s, "nerve simplex")) simplex.push_back(size_from(x, "set index"));
    c.nerve.push_back(std::move(simplex));
  }
  for (const auto& e : array_from(field(j, "cocycle"), "cocycle")) {
    const Json& ab = array_from(field(e, "edge"), "edge");
    expect(ab.size() == 2, "edge must have two entries");
    c.cocycle[{size_from(ab[0], "set index"), size_from(ab[1], "set index")}] =
        ring_matrix_from_json(field(e, "matrix"), c.nvars);
  }
  return c;
}

Json to_json(const FreeComplex& k) {
  Json ds = Json::array();
  for (const auto& d : k.differentials()) ds.push_back(to_json(d));
  return Json{{"vars", k.nvars()}, {"ranks", k.ranks()}, {"differentials", ds}};
}

FreeComplex free_complex_from_json(const Json& j) {
  const std::size_t b = size_from(field(j, "vars"), "vars");
  std::vector<std::size_t> ranks;
  for (const auto& r : array_from(field(j, "ranks"), "ranks")) ranks.push_back(size_from(r, "rank"));
  std::vector<RingMatrix> ds;
  for (const auto& d : array_from(field(j, "differentials"), "differentials")) ds.push_back(ring_matrix_from_json(d, b));
  return FreeComplex(b, std::move(ranks), std::move(ds));
}

FreeComplex complex_source_from_json(const Json& j) {
  return guarded([&] {
    if (j.contains("presentation")) return fox_complex(presentation_from_json(j.at("presentation")));
    if (j.contains("cover")) return cech_complex(cover_datum_from_json(j.at("cover")));
    return free_complex_from_json(field(j, "complex"));
  });
}

Json to_json(const CharacterPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.values()) {
    if (const auto* g = std::get_if<Generic>(&c))
      out.push_back({{"generic", g->index}});
    else
      out.push_back(to_json(std::get<Cyclo>(c)));
  }
  return out;
}

CharacterPoint point_from_json(const Json& j) {
  std::vector<Coordinate> values;
  for (const auto& x : array_from(j, "point")) {
    if (x.is_object() && x.contains("generic"))
      values.emplace_back(Generic{size_from(x.at("generic"), "generic index")});
    else
      values.emplace_back(cyclo_from_json(x));
  }
  return CharacterPoint(std::move(values));
}

Json to_json(const LocusUnion& l) {
  Json members = Json::array();
  for (const auto& p : l.members) {
    Json gens = Json::array();
    for (const auto& g : p.generators) gens.push_back(to_json(g));
    Json m{{"split", {p.split_a, p.split_c}}, {"whole_torus", p.whole_torus}, {"generators", gens}};
    if (l.nvars == 1 && !p.generators.empty()) {
      LaurentPoly g(1);
      for (const auto& f : p.generators) g = univariate_gcd(g, f);
      m["generator_gcd"] = to_json(g);
    }
    members.push_back(std::move(m));
  }
  return Json{{"vars", l.nvars}, {"members", members}};
}

Json to_json(const TranslatedSubtorus& s) {
  Json t = Json::array();
  for (const auto& x : s.translate) t.push_back(to_json(x));
  return Json{{"embed", s.embed}, {"dim", s.dim}, {"translate", t}};
}

TranslatedSubtorus subtorus_from_json(const Json& j) {
  TranslatedSubtorus s;
  s.dim = size_from(field(j, "dim"), "dim");
  for (const auto& row : array_from(field(j, "embed"), "embed")) {
    IntVec r;
    for (const auto& x : array_from(row, "embed row")) r.push_back(int_from(x, "exponent"));
    s.embed.push_back(std::move(r));
  }
  for (const auto& x : array_from(field(j, "translate"), "translate")) s.translate.push_back(cyclo_from_json(x));
  s.validate();
  return s;
}

Json to_json(const OneHodgeStructure& h) { return Json{{"rank", h.rank}, {"w", to_json(h.w)}, {"f", to_json(h.f)}}; }

OneHodgeStructure hodge_from_json(const Json& j) {
  OneHodgeStructure h;
  h.rank = size_from(field(j, "rank"), "rank");
  h.w = subspace_from_json(field(j, "w"), h.rank);
  h.f = subspace_from_json(field(j, "f"), h.rank);
  return h;
}

Json to_json(const std::vector<CertificateComponent>& cert) {
  Json out = Json::array();
  for (const auto& c : cert) {
    Json lat = Json::array();
    for (const auto& v : c.sublattice) {
      Json row = Json::array();
      for (const auto& q : v) row.push_back(to_json(q));
      lat.push_back(std::move(row));
    }
    Json t = Json::array();
    for (const auto& x : c.translate) t.push_back(to_json(x));
    out.push_back({{"sublattice", lat}, {"translate", t}});
  }
  return out;
}

std::vector<CertificateComponent> certificate_from_json(const Json& j) {
  std::vector<CertificateComponent> out;
  for (const auto& c : array_from(j, "certificate")) {
    CertificateComponent comp;
    for (const auto& v : array_from(field(c, "sublattice"), "sublattice")) {
      std::vector<Rational> row;
      for (const auto& q : array_from(v, "lattice vector")) row.push_back(rational_from_json(q));
      comp.sublattice.push_back(std::move(row));
    }
    for (const auto& x : array_from(field(c, "translate"), "translate")) comp.translate.push_back(cyclo_from_json(x));
    out.push_back(std::move(comp));
  }
  return out;
}

Json to_json(const CertificateReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back({{"sub_hodge", c.sub_hodge}, {"contained", c.contained}, {"subtorus", to_json(c.torus)}});
  return Json{{"components", comps},
              {"coverage", {{"samples", r.samples},
                            {"in_locus", r.samples_in_locus},
                            {"covered", r.samples_covered},
                            {"partial", r.coverage_partial}}},
              {"pass", r.pass}};
}

Json to_json(const Filtration& f) {
  Json out = Json::array();
  for (std::size_t n = 0; n < f.num_degrees(); ++n) {
    const SpaceFiltration& s = f.degree(n);
    Json steps = Json::array();
    for (int p = s.lo(); p < s.hi(); ++p) steps.push_back(to_json(s.at(p)));
    out.push_back({{"lo", s.lo()}, {"steps", steps}});
  }
  return out;
}

Filtration filtration_from_json(const Json& j, const std::vector<std::size_t>& dims) {
  array_from(j, "filtration");
  expect(j.size() == dims.size(), "filtration has wrong number of degrees");
  std::vector<SpaceFiltration> per;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    const Json& d = j[n];
    if (d.contains("levels")) {  // level of each basis vector
      std::vector<int> levels;
      for (const auto& x : array_from(d.at("levels"), "levels")) levels.push_back(static_cast<int>(int_from(x, "level")));
      expect(levels.size() == dims[n], "one level per basis vector");
      per.push_back(SpaceFiltration::from_levels(Matrix::identity(dims[n]), levels));
      continue;
    }
    std::vector<Subspace> steps;
    for (const auto& s : array_from(field(d, "steps"), "steps")) steps.push_back(subspace_from_json(s, dims[n]));
    per.emplace_back(dims[n], static_cast<int>(int_from(field(d, "lo"), "lo")), std::move(steps));
  }
  return Filtration(std::move(per));
}

Json to_json(const FilteredComplex& k) {
  Json fs = Json::object();
  for (const auto& [name, f] : k.filtrations()) fs[name] = to_json(f);
  return Json{{"dims", k.dims()}, {"differentials", matrices_json(k.differentials())}, {"filtrations", fs}};
}

FilteredComplex filtered_complex_from_json(const Json& j) {
  return guarded([&] {
    std::vector<std::size_t> dims;
    for (const auto& x : array_from(field(j, "dims"), "dims")) dims.push_back(size_from(x, "dimension"));
    FilteredComplex k(dims, matrices_from(field(j, "differentials"), dims, 1, "differentials"));
    if (j.contains("filtrations"))
      for (const auto& [name, f] : j.at("filtrations").items()) k.set_filtration(name, filtration_from_json(f, dims));
    return k;
  });
}

Json to_json(const SpectralSequence& s) {
  Json pages = Json::array();
  for (const auto& pg : s.pages) {
    Json dims = Json::array();
    for (const auto& [key, d] : pg.dims)
      if (d != 0) dims.push_back({{"p", key.first}, {"n", key.second}, {"dim", d}});
    pages.push_back({{"r", pg.r}, {"dims", dims}});
  }
  return Json{{"pages", pages}, {"degenerates_at", s.degenerates_at}};
}

Json to_json(const BigradedModuleData& a) {
  return Json{{"types", a.holomorphic},      {"d1", matrices_json(a.d1)},   {"d2", matrices_json(a.d2)},
              {"theta", matrices_json(a.theta)}, {"phi", matrices_json(a.phi)}, {"psi", matrices_json(a.psi)},
              {"c", to_json(a.c)},           {"w", to_json(a.w)}};
}

BigradedModuleData module_from_json(const Json& j) {
  return guarded([&] {
    BigradedModuleData a;
    for (const auto& deg : array_from(field(j, "types"), "types")) {
      std::vector<int> t;
      for (const auto& x : array_from(deg, "types")) t.push_back(static_cast<int>(int_from(x, "type")));
      a.holomorphic.push_back(std::move(t));
    }
    const auto dims = a.dims();
    auto blocks = [&](const char* key, std::size_t shift) {
      if (!j.contains(key)) {  // absent operators are zero
        std::vector<Matrix> zero;
        for (std::size_t n = 0; n + shift < dims.size(); ++n) zero.emplace_back(dims[n + shift], dims[n]);
        return zero;
      }
      return matrices_from(j.at(key), dims, shift, key);
    };
    a.d1 = blocks("d1", 1);
    a.d2 = blocks("d2", 1);
    a.theta = blocks("theta", 1);
    a.phi = blocks("phi", 1);
    a.psi = blocks("psi", 0);
    a.c = filtration_from_json(field(j, "c"), dims);
    a.w = filtration_from_json(field(j, "w"), dims);
    return a;
  });
}

Json to_json(const TriangulatedCurve& c) {
  return Json{{"vertices", c.vertex_count()},
              {"faces", c.all_faces()},
              {"edges", c.all_edges()},
              {"punctures", c.punctures()},
              {"branch_vertices", c.branch_vertices()}};
}

TriangulatedCurve curve_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t n = size_from(field(j, "vertices"), "vertices");
    auto list = [&](const char* key) {
      std::vector<std::size_t> out;
      if (j.contains(key))
        for (const auto& x : array_from(j.at(key), key)) out.push_back(size_from(x, key));
      return out;
    };
    std::vector<Face> faces;
    if (j.contains("faces"))
      for (const auto& f : array_from(j.at("faces"), "faces")) {
        expect(f.is_array() && f.size() == 3, "face must have three vertices");
        faces.push_back({size_from(f[0], "vertex"), size_from(f[1], "vertex"), size_from(f[2], "vertex")});
      }
    std::vector<Edge> edges;
    if (j.contains("edges"))
      for (const auto& e : array_from(j.at("edges"), "edges")) {
        expect(e.is_array() && e.size() == 2, "edge must have two vertices");
        edges.push_back({size_from(e[0], "vertex"), size_from(e[1], "vertex")});
      }
    return TriangulatedCurve(n, std::move(faces), std::move(edges), list("punctures"), list("branch_vertices"));
  });
}

Json to_json(const IsotypicDims& d) {
  return Json{{"cochains", d.cochains}, {"cohomology", d.cohomology}, {"euler", d.euler()}};
}

}  // namespace jumploci
