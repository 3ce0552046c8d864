#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace jumploci {

inline constexpr const char* kVersion = "0.1.0";

struct JobSpec {
  std::string command;  // sigma, membership, subtorus, hodge-validate, certificate, spectral, cons, cover
  std::string input;
  std::string output;  // empty or "-" writes to stdout
  std::optional<std::size_t> k;
  std::optional<std::size_t> m;
  std::optional<std::size_t> minor_budget;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  bool timing = false;  // adds wall time to the report (breaks byte-identical output)
};

/// Runs one job and writes the JSON report. Returns 0 on success, 1 on a
/// mathematical FAIL or error, 2 on an input error.
int run(const JobSpec& spec);

}  // namespace jumploci
