#pragma once

#include <cstdint>
#include <string>

namespace mvgeo {

struct CliConfig {
  std::string command;  // compute | verify | sweep | petty
  std::string input;    // polytope JSON path (unused by verify)
  double c1 = 1.0;
  double c2 = 0.0;
  int lambda_steps = 5;
  int quad_level = 5;
  std::uint64_t seed = 42;
  double tol = 1e-5;          // quadrature-path tolerance
  std::string format = "json";  // json | csv
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Validates the config and dispatches. Errors surface as mvgeo::Error.
CommandResult run_command(const CliConfig& cfg);

}  // namespace mvgeo
