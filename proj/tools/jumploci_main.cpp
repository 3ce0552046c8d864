#include <CLI11.hpp>

#include <iostream>

#include "jumploci/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cohomology jump loci, Hodge data and equivariant covers"};
  app.set_version_flag("--version", jumploci::kVersion);
  jumploci::JobSpec spec;
  app.add_option("command", spec.command,
                 "sigma | membership | subtorus | hodge-validate | certificate | spectral | cons | cover")
      ->required();
  app.add_option("--input,-i", spec.input, "Input JSON file")->required();
  app.add_option("--output,-o", spec.output, "Report file (default stdout)");
  std::size_t k = 0, m = 0, budget = 0, samples = 0;
  std::uint64_t seed = 0;
  auto* ko = app.add_option("--k", k, "Cohomological degree");
  auto* mo = app.add_option("--m", m, "Depth (dimension at least m)");
  auto* bo = app.add_option("--minor-budget", budget, "Maximum number of minors per ideal");
  auto* so = app.add_option("--seed", seed, "Random seed for sampling");
  auto* no = app.add_option("--samples", samples, "Number of sampled points");
  app.add_flag("--timing", spec.timing, "Include wall time in the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*ko) spec.k = k;
  if (*mo) spec.m = m;
  if (*bo) spec.minor_budget = budget;
  if (*so) spec.seed = seed;
  if (*no) spec.samples = samples;
  try {
    return jumploci::run(spec);
  } catch (const std::exception& e) {
    std::cerr << "jumploci: " << e.what() << "\n";
    return 2;
  }
}
