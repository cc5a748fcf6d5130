// Command-line front end. Parses flags, forwards to the shared library's C
// interface, and writes the resulting document to stdout or --out.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "mvgeo.h"

namespace {

struct Flags {
  std::string input;
  double c1 = 1.0;
  double c2 = 0.0;
  int lambda_steps = 5;
  int quad_level = 5;
  unsigned long long seed = 42;
  double tol = 1e-5;
  std::string format = "json";
  std::string out;
};

void add_common_flags(CLI::App* cmd, Flags& f, bool needs_input) {
  auto* in = cmd->add_option("--input", f.input, "polytope JSON file");
  if (needs_input) in->required();
  cmd->add_option("--c1", f.c1, "coefficient of Pi (>= 0)");
  cmd->add_option("--c2", f.c2, "coefficient of Pi_o (>= 0)");
  cmd->add_option("--lambda-steps", f.lambda_steps,
                  "grid points for sweep (>= 2)");
  cmd->add_option("--quad-level", f.quad_level, "quadrature level 0..8");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--tol", f.tol, "quadrature-path tolerance");
  cmd->add_option("--format", f.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", f.out, "output path (default stdout)");
}

int run(const char* command, const Flags& f) {
  mvg_command_config cfg{};
  cfg.command = command;
  cfg.input = f.input.empty() ? nullptr : f.input.c_str();
  cfg.c1 = f.c1;
  cfg.c2 = f.c2;
  cfg.lambda_steps = f.lambda_steps;
  cfg.quad_level = f.quad_level;
  cfg.seed = f.seed;
  cfg.tol = f.tol;
  cfg.format = f.format.c_str();

  int exit_code = 0;
  char* text = nullptr;
  mvg_status st = mvg_run_command(&cfg, &exit_code, &text);
  if (st != MVG_OK) {
    std::fprintf(stderr, "error: %s\n", mvg_last_error());
    return 2;
  }

  if (f.out.empty()) {
    std::fputs(text, stdout);
  } else {
    // write to a sibling temp file first so readers never see partial output
    std::string tmp = f.out + ".tmp";
    std::FILE* fp = std::fopen(tmp.c_str(), "wb");
    if (!fp) {
      std::fprintf(stderr, "error: cannot write %s\n", tmp.c_str());
      mvg_string_free(text);
      return 2;
    }
    std::fputs(text, fp);
    std::fclose(fp);
    if (std::rename(tmp.c_str(), f.out.c_str()) != 0) {
      std::fprintf(stderr, "error: cannot move output into place\n");
      mvg_string_free(text);
      return 2;
    }
  }
  mvg_string_free(text);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Projection-body valuations Phi = c1 Pi + c2 Pi_o: compute, verify, "
      "sweep, petty"};
  app.require_subcommand(1);

  Flags f;
  auto* compute = app.add_subcommand(
      "compute", "emit Phi K as a canonical zonotope with polar volume");
  add_common_flags(compute, f, true);
  auto* verify = app.add_subcommand(
      "verify", "run the seeded property-check suite (exit 0 iff all pass)");
  add_common_flags(verify, f, false);
  auto* sweep = app.add_subcommand(
      "sweep", "tabulate the lambda-family polar volumes and affine products");
  add_common_flags(sweep, f, true);
  auto* petty = app.add_subcommand(
      "petty", "affine product of the input against the ball bound");
  add_common_flags(petty, f, true);

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) return run("compute", f);
  if (verify->parsed()) return run("verify", f);
  if (sweep->parsed()) return run("sweep", f);
  return run("petty", f);
}
