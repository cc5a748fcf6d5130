#include "mvgeo/commands.hpp"

#include <cmath>
#include <random>

#include "mvgeo/io.hpp"
#include "mvgeo/polar.hpp"
#include "mvgeo/quadrature.hpp"
#include "mvgeo/valuation.hpp"
#include "mvgeo/verify.hpp"

namespace mvgeo {

namespace {

void validate(const CliConfig& cfg) {
  if (cfg.c1 < 0 || cfg.c2 < 0)
    throw Error(ErrorCode::InvalidParams, "c1 and c2 must be >= 0");
  if (cfg.lambda_steps < 2)
    throw Error(ErrorCode::InvalidParams, "lambda-steps must be >= 2");
  if (cfg.quad_level < 0 || cfg.quad_level > 8)
    throw Error(ErrorCode::InvalidParams, "quad-level must be in 0..8");
  if (cfg.format != "json" && cfg.format != "csv")
    throw Error(ErrorCode::InvalidParams, "format must be json or csv");
}

Polytope load_body(const CliConfig& cfg) {
  if (cfg.input.empty())
    throw Error(ErrorCode::InvalidParams, "--input is required");
  return polytope_from_json(read_file(cfg.input));
}

Vec sample_direction(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec u(n);
  do {
    for (int i = 0; i < n; ++i) u(i) = gauss(rng);
  } while (u.norm() < 1e-12);
  return u.normalized();
}

CommandResult cmd_compute(const CliConfig& cfg) {
  Polytope K = load_body(cfg);
  Zonotope Z = phi(K, {cfg.c1, cfg.c2});

  std::mt19937_64 rng(cfg.seed);
  const int n_samples = 16;
  std::vector<Vec> dirs;
  std::vector<double> hs;
  for (int i = 0; i < n_samples; ++i) {
    Vec u = sample_direction(rng, Z.dim());
    dirs.push_back(u);
    hs.push_back(Z.support(u));
  }

  bool has_volume = Z.full_dimensional();
  double vol = 0.0;
  std::string reason;
  if (has_volume) {
    auto q = make_quadrature(Z.dim(), cfg.quad_level, cfg.seed);
    vol = polar_volume(Z, q);
  } else {
    reason = "phi K is lower-dimensional; 0 is not interior to it";
  }

  CommandResult res;
  if (cfg.format == "json") {
    std::string out = "{\"command\":\"compute\",\"zonotope\":";
    out += zonotope_to_json(Z);
    out += ",\"support_samples\":[";
    for (int i = 0; i < n_samples; ++i) {
      if (i) out += ',';
      out += "{\"u\":[";
      for (int k = 0; k < dirs[i].size(); ++k) {
        if (k) out += ',';
        out += format_double(dirs[i](k));
      }
      out += "],\"h\":" + format_double(hs[i]) + "}";
    }
    out += "],\"polar_volume\":";
    out += has_volume ? format_double(vol) : "null";
    if (!has_volume) out += ",\"reason\":\"" + reason + "\"";
    out += "}\n";
    res.output = std::move(out);
  } else {
    std::string out = "record,x1,x2,x3,value\n";
    for (const auto& g : Z.generators()) {
      out += "generator";
      for (int k = 0; k < g.size(); ++k) out += ',' + format_double(g(k));
      out += ",\n";
    }
    for (int i = 0; i < n_samples; ++i) {
      out += "support_sample";
      for (int k = 0; k < dirs[i].size(); ++k)
        out += ',' + format_double(dirs[i](k));
      out += ',' + format_double(hs[i]) + '\n';
    }
    out += "polar_volume,,,,";
    out += has_volume ? format_double(vol) : "";
    out += '\n';
    res.output = std::move(out);
  }
  return res;
}

CommandResult cmd_verify(const CliConfig& cfg) {
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.quad_level = cfg.quad_level;
  sc.tol_quad = cfg.tol;
  auto reports = run_suite(sc);
  CommandResult res;
  res.output = cfg.format == "json" ? reports_to_jsonl(reports)
                                    : reports_to_csv(reports);
  res.exit_code = all_passed(reports) ? 0 : 1;
  return res;
}

CommandResult cmd_sweep(const CliConfig& cfg) {
  Polytope K = load_body(cfg);
  const int n = K.ambient_dim();
  if (!K.is_full_dimensional())
    throw Error(ErrorCode::DegenerateBody, "sweep needs a full-dimensional body");

  auto q = make_quadrature(n, cfg.quad_level, cfg.seed);
  Vec hpi = projection_body(K).support_batch(q.nodes);
  Vec hpo = projection_body_o(K).support_batch(q.nodes);
  const double vol_k = volume(K);
  const double bound = std::pow(ball_volume(n) / ball_volume(n - 1), n);
  const double v_pi = pairwise_dot(q.weights, hpi.array().pow(-n).matrix()) / n;

  CommandResult res;
  std::string csv = "lambda,polar_volume,affine_product,ratio_to_ball_bound\n";
  std::string json = "{\"command\":\"sweep\",\"rows\":[";
  for (int s = 0; s < cfg.lambda_steps; ++s) {
    double lambda = static_cast<double>(s) / (cfg.lambda_steps - 1);
    Vec h = lambda * hpi + (1.0 - lambda) * hpo;
    double v = pairwise_dot(q.weights, h.array().pow(-n).matrix()) / n;
    double product = std::pow(vol_k, n - 1) * v;
    double ratio = product / bound;
    if (v > v_pi * (1.0 + cfg.tol)) res.exit_code = 1;
    csv += format_double(lambda) + ',' + format_double(v) + ',' +
           format_double(product) + ',' + format_double(ratio) + '\n';
    if (s) json += ',';
    json += "{\"lambda\":" + format_double(lambda) +
            ",\"polar_volume\":" + format_double(v) +
            ",\"affine_product\":" + format_double(product) +
            ",\"ratio_to_ball_bound\":" + format_double(ratio) + "}";
  }
  json += "]}\n";
  res.output = cfg.format == "json" ? json : csv;
  return res;
}

CommandResult cmd_petty(const CliConfig& cfg) {
  Polytope K = load_body(cfg);
  const int n = K.ambient_dim();
  if (!K.is_full_dimensional())
    throw Error(ErrorCode::DegenerateBody, "petty needs a full-dimensional body");

  auto q = make_quadrature(n, cfg.quad_level, cfg.seed);
  double v = polar_volume(projection_body(K), q);
  double product = std::pow(volume(K), n - 1) * v;
  double bound = std::pow(ball_volume(n) / ball_volume(n - 1), n);
  double ratio = product / bound;

  CommandResult res;
  res.exit_code = ratio <= 1.0 + cfg.tol ? 0 : 1;
  if (cfg.format == "json") {
    res.output = "{\"command\":\"petty\",\"affine_product\":" +
                 format_double(product) +
                 ",\"ball_bound\":" + format_double(bound) +
                 ",\"ratio\":" + format_double(ratio) + "}\n";
  } else {
    res.output = "affine_product,ball_bound,ratio\n" + format_double(product) +
                 ',' + format_double(bound) + ',' + format_double(ratio) + '\n';
  }
  return res;
}

}  // namespace

CommandResult run_command(const CliConfig& cfg) {
  validate(cfg);
  if (cfg.command == "compute") return cmd_compute(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  if (cfg.command == "petty") return cmd_petty(cfg);
  throw Error(ErrorCode::InvalidParams, "unknown command: " + cfg.command);
}

}  // namespace mvgeo
