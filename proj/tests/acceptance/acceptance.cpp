// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <cli> <data dir>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "jumploci/certificate.hpp"
#include "jumploci/covers.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/jump_loci.hpp"
#include "oracles.hpp"

using jumploci::CharacterPoint;
using jumploci::Cyclo;
using jumploci::Rational;
using jumploci::Subspace;
using testsupport::Rng;

namespace {

namespace fs = std::filesystem;

// Pinned limits (seconds).
constexpr double kLimitLoci = 60.0;
constexpr double kLimitTrefoil = 5.0;
constexpr double kLimitChodge = 120.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit = 0;  // 0: no runtime requirement
};

// Counts checks; the first few failures are kept for the report.
struct Tally {
  std::size_t checks = 0, failures = 0;
  std::string first;
  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(double limit = 0) const {
    std::ostringstream s;
    s << checks << " checks, " << failures << " failures";
    if (failures) s << " (first: " << first << ")";
    return {failures == 0, s.str(), limit};
  }
};

// 1. Locus membership against an independent rank computation.
Outcome criterion_loci() {
  Tally t;
  for (const auto& entry : testsupport::complex_corpus(2024)) {
    const auto& k = entry.complex;
    std::vector<std::vector<jumploci::LocusUnion>> loci(k.top_degree() + 1);
    for (std::size_t deg = 0; deg <= k.top_degree(); ++deg)
      for (std::size_t m = 1; m <= k.ranks()[deg]; ++m) loci[deg].push_back(jumploci::sigma_locus(k, deg, m));
    Rng rng(std::hash<std::string>{}(entry.name) % 100000);
    for (int i = 0; i < 100; ++i) {
      const auto p = testsupport::random_character(rng, k.nvars());
      const auto h = testsupport::oracle_cohomology(k, p);
      for (std::size_t deg = 0; deg <= k.top_degree(); ++deg)
        for (std::size_t m = 1; m <= k.ranks()[deg]; ++m)
          t(jumploci::locus_contains(loci[deg][m - 1], CharacterPoint::algebraic(p)) == (h[deg] >= m),
            entry.name + " degree " + std::to_string(deg) + " m " + std::to_string(m));
    }
  }
  return t.outcome(kLimitLoci);
}

// 2. Trefoil: gcd of a member equals the Fox-calculus Alexander polynomial.
Outcome criterion_trefoil() {
  Tally t;
  const auto k = jumploci::fox_complex(testsupport::trefoil_group());
  const auto l = jumploci::sigma_locus(k, 1, 1);
  const auto oracle = testsupport::normalize(testsupport::fox_alexander(testsupport::kTrefoilRelator, {1, 1}));
  t(oracle == testsupport::QPoly{Rational(1), Rational(-1), Rational(1)}, "oracle is t^2 - t + 1");
  bool found = false;
  for (const auto& member : l.members) {
    if (member.whole_torus || member.generators.empty()) continue;
    jumploci::LaurentPoly g = member.generators.front();
    for (const auto& f : member.generators) g = jumploci::univariate_gcd(g, f);
    found = found || testsupport::normalize(testsupport::qpoly_from(g)) == oracle;
  }
  t(found, "a member with gcd t^2 - t + 1");
  for (long n = 1; n <= 12; ++n)
    for (long j = 0; j < n; ++j) {
      const long order = n / std::gcd(n, j);
      const bool expected = order == 1 || order == 6;
      t(jumploci::locus_contains(l, CharacterPoint::algebraic({Cyclo::zeta(n, j)})) == expected,
        "zeta_" + std::to_string(n) + "^" + std::to_string(j));
    }
  return t.outcome(kLimitTrefoil);
}

jumploci::OneHodgeStructure weight_one(std::size_t g) {
  std::vector<jumploci::Vec> f;
  for (std::size_t k = 0; k < g; ++k) {
    jumploci::Vec v(2 * g, Cyclo(0));
    v[2 * k] = Cyclo(1);
    v[2 * k + 1] = Cyclo::zeta(4);
    f.push_back(v);
  }
  return {2 * g, Subspace::whole(2 * g), Subspace::span(2 * g, f)};
}

std::vector<std::vector<Rational>> identity_lattice(std::size_t b) {
  std::vector<std::vector<Rational>> rows(b, std::vector<Rational>(b, Rational(0)));
  for (std::size_t i = 0; i < b; ++i) rows[i][i] = 1;
  return rows;
}

// 3. Certificates.
Outcome criterion_certificates() {
  Tally t;
  const auto g2 = jumploci::sigma_locus(jumploci::fox_complex(testsupport::genus2_group()), 1, 1);
  t(jumploci::verify_exp_hodge_certificate(g2, weight_one(2), {{identity_lattice(4), std::vector<Cyclo>(4, Cyclo(1))}}, 1, 200)
        .pass,
    "genus 2 full torus passes");
  const auto z2 = jumploci::sigma_locus(jumploci::fox_complex(testsupport::z2_group()), 1, 1);
  t(jumploci::verify_exp_hodge_certificate(z2, weight_one(1), {{{}, {Cyclo(1), Cyclo(1)}}}, 2, 200).pass,
    "Z^2 point passes");
  const auto tr = jumploci::sigma_locus(jumploci::fox_complex(testsupport::trefoil_group()), 1, 1);
  const jumploci::OneHodgeStructure line{1, Subspace::span(1, {}), Subspace::whole(1)};
  t(!jumploci::verify_exp_hodge_certificate(tr, line, {{identity_lattice(1), {Cyclo(1)}}}, 3, 200).pass,
    "trefoil full torus fails");
  return t.outcome();
}

// 4. 1-Hodge linear algebra.
Outcome criterion_hodge() {
  Tally t;
  Rng rng(404);
  for (int i = 0; i < 100; ++i) {
    const auto inst = testsupport::random_hodge(rng, 6);
    t(jumploci::roundtrip_formats(inst.h).fixpoint, "roundtrip " + std::to_string(i));
    t(jumploci::check_admissible(jumploci::standard_admissible(inst.h)).ok(), "admissible " + std::to_string(i));
  }
  for (int i = 0; i < 50; ++i) {
    const auto inst = testsupport::random_hodge(rng, 6);
    const auto p = jumploci::validate_hodge(inst.h);
    const Subspace& target = inst.sub;
    // smallest conjugation-stable space containing T cap (H10 + H11)
    const Subspace x = intersect(target, p.h10 + p.h11);
    const Subspace s = x + jumploci::conj(x);
    t(jumploci::check_subspace_rigidity(s, target, jumploci::standard_admissible(inst.h)),
      "rigidity " + std::to_string(i));
  }
  return t.outcome();
}

// 5. C-Hodge complexes and the twisted pair.
Outcome criterion_chodge() {
  Tally t;
  Rng rng(505);
  for (int i = 0; i < 100; ++i) {
    const auto k = testsupport::random_chodge(rng, 8);
    t(jumploci::check_chodge(k).ok(), "C-Hodge " + std::to_string(i));
    t(jumploci::spectral_sequence(k, "W").degenerates_by(2), "W degenerates at E_2, complex " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const auto a = testsupport::random_module(rng);
    jumploci::validate(a);
    for (auto mode : {jumploci::ConsMode::Theta, jumploci::ConsMode::PhiPsi}) {
      const std::string tag = std::string(mode == jumploci::ConsMode::Theta ? "theta" : "phi-psi") + " module " +
                              std::to_string(i);
      t(jumploci::check_chodge(jumploci::cons(a, mode, jumploci::default_slots(a))).ok(), "cons output, " + tag);
      const auto pair = jumploci::twisted_cohomology_pair(a, mode);
      t(pair.total == pair.dbar, "equal dimensions, " + tag);
    }
    t(jumploci::check_nonvanishing_transfer(a), "nonvanishing transfer, module " + std::to_string(i));
  }
  return t.outcome(kLimitChodge);
}

std::vector<std::vector<long>> all_values(std::size_t len, long n) {
  std::vector<std::vector<long>> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& v : out)
      for (long k = 0; k < n; ++k) {
        next.push_back(v);
        next.back().push_back(k);
      }
    out = std::move(next);
  }
  return out;
}

// 6. Equivariant covers.
Outcome criterion_covers() {
  Tally t;
  const std::vector<Cyclo> roots{Cyclo(1), Cyclo(-1), Cyclo::zeta(4), Cyclo::zeta(4, 3)};
  for (const auto& curve : {jumploci::thrice_punctured_sphere(), jumploci::once_punctured_torus()}) {
    // branching allowed over the subdivision vertex; its boundary loop is the third homology class
    const auto c = curve.with_branch_vertices({curve.vertex_count() - 1});
    const std::size_t h1 = jumploci::homology_basis(c.unbranched_part()).rank;
    const std::size_t edges = c.open_curve().edges.size(), faces = c.open_curve().faces.size();
    std::vector<std::vector<Cyclo>> systems;
    for (const auto& a : roots)
      for (const auto& b : roots) systems.push_back(jumploci::local_system_from_homology(c, {a, b}));
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& values : all_values(h1, static_cast<long>(n))) {
        const auto cover = jumploci::build_cover(c, n, jumploci::monodromy_from_homology(c, n, values));
        for (const auto& xi : systems) {
          const auto total = jumploci::total_dims(cover, xi);
          std::array<std::size_t, 3> cochains{}, cohomology{};
          for (long r = 0; r < static_cast<long>(n); ++r) {
            const auto d = jumploci::isotypic_dims(cover, xi, r);
            const std::string tag = "N " + std::to_string(n) + " rho " + std::to_string(r);
            t(d.euler() < 0 && d.cohomology[1] >= 1, "negative Euler, " + tag);
            t(d.cochains[1] == edges && d.cochains[2] == faces, "cochain count, " + tag);
            for (std::size_t i = 0; i < 3; ++i) {
              cochains[i] += d.cochains[i];
              cohomology[i] += d.cohomology[i];
            }
          }
          t(cochains == total.cochains && cohomology == total.cohomology, "isotypic sum, N " + std::to_string(n));
        }
      }
  }
  return t.outcome();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// 7. Byte-identical reports from repeated CLI runs.
Outcome criterion_determinism(const std::string& cli, const fs::path& data) {
  Tally t;
  const fs::path dir = fs::temp_directory_path() / ("jumploci_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> jobs{
      "certificate --seed 42 --samples 100 -i '" + (data / "genus2_certificate.json").string() + "'",
      "certificate --seed 7 -i '" + (data / "trefoil_certificate.json").string() + "'",
      "sigma -i '" + (data / "trefoil.json").string() + "'",
      "cover -i '" + (data / "sphere_cover.json").string() + "'"};
  int counter = 0;
  for (const auto& job : jobs) {
    std::string outputs[2];
    for (auto& out : outputs) {
      const fs::path file = dir / ("run" + std::to_string(counter++) + ".json");
      const std::string cmd = "'" + cli + "' " + job + " -o '" + file.string() + "' 2>/dev/null";
      const int raw = std::system(cmd.c_str());
      t(WIFEXITED(raw) && WEXITSTATUS(raw) <= 1, "exit status of " + job);
      out = slurp(file);
    }
    t(!outputs[0].empty() && outputs[0] == outputs[1], job);
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return t.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <jumploci binary> <data dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path data = argv[2];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"locus membership agrees with rank drop", criterion_loci},
      {"trefoil characteristic variety", criterion_trefoil},
      {"structure certificates", criterion_certificates},
      {"1-Hodge linear algebra", criterion_hodge},
      {"C-Hodge complexes and twisted pairs", criterion_chodge},
      {"equivariant covers", criterion_covers},
      {"deterministic CLI reports", [&] { return criterion_determinism(cli, data); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = o.limit == 0 || secs < o.limit;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    if (o.limit > 0)
      std::snprintf(timing, sizeof timing, "%.1f s, limit %.0f s", secs, o.limit);
    else
      std::snprintf(timing, sizeof timing, "%.1f s", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << o.detail
              << "; " << timing << "]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
