#include "jumploci/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "jumploci/errors.hpp"
#include "jumploci/ring_matrix.hpp"
#include "jumploci/serialize.hpp"

namespace jumploci {

namespace {

struct Outcome {
  Json result;
  bool pass = true;
};

const std::set<std::string> kCommands = {"sigma", "membership", "subtorus", "hodge-validate",
                                         "certificate", "spectral", "cons", "cover"};

void validate_options(const JobSpec& s) {
  require(kCommands.count(s.command) != 0, ErrorCode::SchemaError, "unknown command '" + s.command + "'");
  const bool locus = s.command == "sigma" || s.command == "membership" || s.command == "subtorus" ||
                     s.command == "certificate";
  require(locus || (!s.k && !s.m && !s.minor_budget), ErrorCode::SchemaError,
          "--k, --m and --minor-budget apply to locus commands only");
  require(s.command == "certificate" || (!s.seed && !s.samples), ErrorCode::SchemaError,
          "--seed and --samples apply to the certificate command only");
  require(s.command != "certificate" || s.seed.has_value(), ErrorCode::SchemaError,
          "the certificate command samples points and needs --seed");
  require(!s.m || *s.m >= 1, ErrorCode::SchemaError, "--m must be at least 1");
  require(!s.samples || *s.samples >= 1, ErrorCode::SchemaError, "--samples must be positive");
}

Json options_json(const JobSpec& s) {
  Json o = Json::object();
  if (s.k) o["k"] = *s.k;
  if (s.m) o["m"] = *s.m;
  if (s.minor_budget) o["minor_budget"] = *s.minor_budget;
  if (s.seed) o["seed"] = *s.seed;
  if (s.samples) o["samples"] = *s.samples;
  return o;
}

LocusUnion locus_for(const JobSpec& s, const FreeComplex& k) {
  return sigma_locus(k, s.k.value_or(1), s.m.value_or(1), s.minor_budget.value_or(kDefaultMinorBudget));
}

const Json& need(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::SchemaError, std::string("input needs field '") + key + "'");
  return j.at(key);
}

Outcome do_sigma(const JobSpec& s, const Json& in) {
  const FreeComplex k = complex_source_from_json(in);
  return {Json{{"locus", to_json(locus_for(s, k))}}, true};
}

Outcome do_membership(const JobSpec& s, const Json& in) {
  const FreeComplex k = complex_source_from_json(in);
  const CharacterPoint p = point_from_json(need(in, "point"));
  require(p.size() == k.nvars(), ErrorCode::SchemaError, "point has wrong number of coordinates");
  const LocusUnion l = locus_for(s, k);
  const bool contains = locus_contains(l, p);
  const auto dims = cohomology_dims(k, p);
  const std::size_t degree = s.k.value_or(1);
  const bool direct = degree < dims.size() && dims[degree] >= s.m.value_or(1);
  return {Json{{"contains", contains}, {"cohomology_dims", dims}, {"direct_rank_check", direct}}, contains == direct};
}

Outcome do_subtorus(const JobSpec& s, const Json& in) {
  const FreeComplex k = complex_source_from_json(in);
  const TranslatedSubtorus t = subtorus_from_json(need(in, "subtorus"));
  require(t.translate.size() == k.nvars(), ErrorCode::SchemaError, "subtorus lives in the wrong torus");
  return {Json{{"contained", subtorus_contained(locus_for(s, k), t)}}, true};
}

Outcome do_hodge(const JobSpec&, const Json& in) {
  const OneHodgeStructure h = hodge_from_json(need(in, "hodge"));
  const HodgePieces p = validate_hodge(h);
  const RoundTrip rt = roundtrip_formats(h);
  Json r{{"dims", {{"h10", p.h10.dim()}, {"h01", p.h01.dim()}, {"h11", p.h11.dim()}}},
         {"roundtrip_fixpoint", rt.fixpoint}};
  if (in.contains("subspace")) r["sub_hodge"] = is_sub_hodge(h, subspace_from_json(in.at("subspace"), h.rank));
  return {r, rt.fixpoint};
}

Outcome do_certificate(const JobSpec& s, const Json& in) {
  const FreeComplex k = complex_source_from_json(in);
  const OneHodgeStructure h = hodge_from_json(need(in, "hodge"));
  const auto cert = certificate_from_json(need(in, "certificate"));
  const CertificateReport r = verify_exp_hodge_certificate(locus_for(s, k), h, cert, *s.seed, s.samples.value_or(200));
  return {Json{{"certificate", to_json(r)}}, r.pass};
}

Outcome do_spectral(const JobSpec&, const Json& in) {
  const FilteredComplex k = filtered_complex_from_json(need(in, "filtered_complex"));
  const std::string name = in.value("filtration", std::string("F"));
  Json r{{"cohomology_dims", k.cohomology_dims()}, {"spectral_sequence", to_json(spectral_sequence(k, name))}};
  bool pass = true;
  if (k.has_filtration("F") && k.has_filtration("C") && k.has_filtration("W")) {
    const ChodgeReport c = check_chodge(k);
    r["chodge"] = {{"strict", c.strict}, {"opposed", c.opposed}};
    pass = c.ok();
  }
  return {r, pass};
}

Outcome do_cons(const JobSpec&, const Json& in) {
  const BigradedModuleData a = module_from_json(need(in, "module"));
  validate(a);
  const std::string mode_name = in.value("mode", std::string("theta"));
  require(mode_name == "theta" || mode_name == "phi-psi", ErrorCode::SchemaError, "mode must be theta or phi-psi");
  const ConsMode mode = mode_name == "theta" ? ConsMode::Theta : ConsMode::PhiPsi;
  const std::size_t slots = in.contains("slots") ? in.at("slots").get<std::size_t>() : default_slots(a);
  const FilteredComplex b = cons(a, mode, slots);
  const ChodgeReport ch = check_chodge(b);
  const TwistedPair tp = twisted_cohomology_pair(a, mode);
  const ComparisonReport& c = tp.comparison;
  Json r{{"slots", slots},
         {"cons", {{"dims", b.dims()}, {"chodge", {{"strict", ch.strict}, {"opposed", ch.opposed}}}}},
         {"total", {{"cohomology_dims", tp.total}, {"e2_degenerates", tp.total_degenerates}}},
         {"dbar", {{"cohomology_dims", tp.dbar}, {"e2_degenerates", tp.dbar_degenerates}}},
         {"comparison",
          {{"morphism", c.morphism}, {"exact", c.exact}, {"degenerates", c.degenerates},
           {"same_cohomology", c.same_cohomology}}}};
  try {
    r["nonvanishing_transfer"] = check_nonvanishing_transfer(a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionFailed) throw;
    r["nonvanishing_transfer"] = "not applicable";
  }
  const bool pass = ch.ok() && c.morphism && c.exact && c.degenerates && c.same_cohomology &&
                    tp.total_degenerates && tp.dbar_degenerates && tp.total == tp.dbar;
  return {r, pass};
}

Outcome do_cover(const JobSpec&, const Json& in) {
  const TriangulatedCurve c = curve_from_json(need(in, "curve"));
  const Json& cov = need(in, "cover");
  const std::size_t n = need(cov, "N").get<std::size_t>();
  std::vector<long> mono;
  const Json& mj = need(cov, "monodromy");
  if (mj.contains("homology"))
    mono = monodromy_from_homology(c, n, mj.at("homology").get<std::vector<long>>());
  else
    mono = need(mj, "cocycle").get<std::vector<long>>();
  const MuNCover cover = build_cover(c, n, mono);

  std::vector<Cyclo> xi;
  if (in.contains("xi") && in.at("xi").contains("cocycle")) {
    for (const auto& x : in.at("xi").at("cocycle")) xi.push_back(cyclo_from_json(x));
  } else {
    std::vector<Cyclo> gens(homology_basis(c.open_curve()).rank, Cyclo(1));
    if (in.contains("xi")) {
      gens.clear();
      for (const auto& x : need(in.at("xi"), "homology")) gens.push_back(cyclo_from_json(x));
    }
    xi = local_system_from_homology(c, gens);
  }
  std::vector<long> rhos;
  if (in.contains("rho"))
    rhos.push_back(in.at("rho").get<long>());
  else
    for (long r = 0; r < static_cast<long>(n); ++r) rhos.push_back(r);

  Json iso = Json::object();
  for (const auto& [v, o] : cover.isotropy()) iso[std::to_string(v)] = o;
  Json per = Json::array();
  bool pass = true;
  const bool general_type = c.euler_characteristic() < 0;
  for (long r : rhos) {
    const IsotypicDims d = isotypic_dims(cover, xi, r);
    Json e{{"rho", r}, {"dims", to_json(d)}};
    if (general_type) {
      const bool neg = check_negative_euler(cover, xi, r);
      e["negative_euler"] = neg;
      pass = pass && neg;
    }
    per.push_back(std::move(e));
  }
  return {Json{{"euler_characteristic", c.euler_characteristic()},
               {"lifted", {{"vertices", cover.vertices().size()}, {"edges", cover.edges().size()}, {"faces", cover.faces().size()}}},
               {"isotropy", iso},
               {"isotypic", per}},
          pass};
}

Outcome dispatch(const JobSpec& s, const Json& in) {
  if (s.command == "sigma") return do_sigma(s, in);
  if (s.command == "membership") return do_membership(s, in);
  if (s.command == "subtorus") return do_subtorus(s, in);
  if (s.command == "hodge-validate") return do_hodge(s, in);
  if (s.command == "certificate") return do_certificate(s, in);
  if (s.command == "spectral") return do_spectral(s, in);
  if (s.command == "cons") return do_cons(s, in);
  return do_cover(s, in);
}

void emit(const JobSpec& s, const Json& report) {
  const std::string text = report.dump(2) + "\n";
  if (s.output.empty() || s.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(s.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + s.output);
  out << text;
}

}  // namespace

int run(const JobSpec& spec) {
  Json report{{"schema", kSchema}, {"command", spec.command}, {"version", kVersion}};
  int status = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    validate_options(spec);
    report["options"] = options_json(spec);
    std::ifstream file(spec.input, std::ios::binary);
    require(static_cast<bool>(file), ErrorCode::SchemaError, "cannot read input '" + spec.input + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    Json in;
    try {
      in = Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
    }
    require(in.is_object() && in.value("schema", std::string()) == kSchema, ErrorCode::SchemaError,
            std::string("input must declare \"schema\": \"") + kSchema + "\"");
    report["input"] = in;
    Outcome o;
    try {
      o = dispatch(spec, in);
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorCode::SchemaError, e.what());
    }
    report["result"] = std::move(o.result);
    report["status"] = o.pass ? "PASS" : "FAIL";
    status = o.pass ? 0 : 1;
  } catch (const Error& e) {
    report["error"] = {{"code", error_name(e.code())}, {"message", e.what()}};
    report["status"] = "ERROR";
    status = e.code() == ErrorCode::SchemaError ? 2 : 1;
  }
  if (spec.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(spec, report);
  return status;
}

}  // namespace jumploci
