#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "netaug/types.hpp"

namespace netaug {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitInfeasible = 2,
  kExitSizeGuard = 3,
  kExitParseError = 4,
};

struct CliOptions {
  std::string command;      // spanner, kcap-link, kcap-full, stap, sndp, kecss, oracle
  std::string oracle_kind;  // kcap, stap, sndp, kecss (oracle command only)
  std::string input;
  std::size_t t = 2;
  double epsilon = 0.5;
  std::optional<std::size_t> k;
  std::vector<Vertex> terminals;
  std::string requirements;
  std::string cactus;
  bool with_oracle = false;
  std::string output;
  std::string report;
};

struct CliOutcome {
  int exit_code = kExitOk;
  std::string report_json;  // empty when the run failed before producing a report
  std::string error;
};

/// Executes one command. The JSON report has sorted keys; every field other
/// than wall_time_ms is a pure function of the inputs.
CliOutcome run(const CliOptions& opts);

}  // namespace netaug
