#include "mvgeo.h"

#include <cstring>
#include <new>
#include <string>

#include "mvgeo/commands.hpp"
#include "mvgeo/io.hpp"
#include "mvgeo/polar.hpp"
#include "mvgeo/quadrature.hpp"
#include "mvgeo/valuation.hpp"

namespace {

thread_local std::string g_last_error;

mvg_status status_of(mvgeo::ErrorCode c) {
  using mvgeo::ErrorCode;
  switch (c) {
    case ErrorCode::EmptyInput: return MVG_ERR_EMPTY_INPUT;
    case ErrorCode::EmptyBody: return MVG_ERR_EMPTY_BODY;
    case ErrorCode::InvalidParams: return MVG_ERR_INVALID_PARAMS;
    case ErrorCode::SingularMatrix: return MVG_ERR_SINGULAR_MATRIX;
    case ErrorCode::OriginNotInterior: return MVG_ERR_ORIGIN_NOT_INTERIOR;
    case ErrorCode::DegenerateRadial: return MVG_ERR_DEGENERATE_RADIAL;
    case ErrorCode::DegenerateBody: return MVG_ERR_DEGENERATE_BODY;
    case ErrorCode::WrongStratum: return MVG_ERR_WRONG_STRATUM;
    case ErrorCode::InvalidDimension: return MVG_ERR_INVALID_DIMENSION;
    case ErrorCode::ParseError: return MVG_ERR_PARSE;
    case ErrorCode::Internal: return MVG_ERR_INTERNAL;
  }
  return MVG_ERR_UNKNOWN;
}

template <typename F>
mvg_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return MVG_OK;
  } catch (const mvgeo::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MVG_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return MVG_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mvg_status require(bool ok, const char* msg) {
  if (ok) return MVG_OK;
  g_last_error = msg;
  return MVG_ERR_INVALID_PARAMS;
}

}  // namespace

struct mvg_polytope {
  mvgeo::Polytope body;
};
struct mvg_zonotope {
  mvgeo::Zonotope z;
};

extern "C" {

const char* mvg_last_error(void) { return g_last_error.c_str(); }

mvg_status mvg_polytope_from_json(const char* json, mvg_polytope** out) {
  if (auto s = require(json && out, "null argument")) return s;
  return guarded([&] {
    *out = new mvg_polytope{mvgeo::polytope_from_json(json)};
  });
}

mvg_status mvg_polytope_to_json(const mvg_polytope* p, char** out_json) {
  if (auto s = require(p && out_json, "null argument")) return s;
  return guarded([&] { *out_json = dup_string(mvgeo::polytope_to_json(p->body)); });
}

mvg_status mvg_polytope_volume(const mvg_polytope* p, double* out) {
  if (auto s = require(p && out, "null argument")) return s;
  return guarded([&] { *out = mvgeo::volume(p->body); });
}

mvg_status mvg_polytope_dim(const mvg_polytope* p, int* ambient,
                            int* intrinsic) {
  if (auto s = require(p != nullptr, "null argument")) return s;
  return guarded([&] {
    if (ambient) *ambient = p->body.ambient_dim();
    if (intrinsic) *intrinsic = p->body.intrinsic_dim();
  });
}

void mvg_polytope_free(mvg_polytope* p) { delete p; }

mvg_status mvg_phi(const mvg_polytope* p, double c1, double c2,
                   mvg_zonotope** out) {
  if (auto s = require(p && out, "null argument")) return s;
  return guarded([&] {
    *out = new mvg_zonotope{mvgeo::phi(p->body, {c1, c2})};
  });
}

mvg_status mvg_zonotope_to_json(const mvg_zonotope* z, char** out_json) {
  if (auto s = require(z && out_json, "null argument")) return s;
  return guarded([&] { *out_json = dup_string(mvgeo::zonotope_to_json(z->z)); });
}

mvg_status mvg_zonotope_from_json(const char* json, mvg_zonotope** out) {
  if (auto s = require(json && out, "null argument")) return s;
  return guarded([&] {
    *out = new mvg_zonotope{mvgeo::zonotope_from_json(json)};
  });
}

mvg_status mvg_zonotope_support(const mvg_zonotope* z, const double* u,
                                int dim, double* out) {
  if (auto s = require(z && u && out, "null argument")) return s;
  if (auto s = require(dim == z->z.dim(), "direction dimension mismatch"))
    return s;
  return guarded([&] {
    mvgeo::Vec v = Eigen::Map<const mvgeo::Vec>(u, dim);
    *out = z->z.support(v);
  });
}

void mvg_zonotope_free(mvg_zonotope* z) { delete z; }

mvg_status mvg_polar_volume(const mvg_zonotope* z, int quad_level,
                            unsigned long long seed, double* out) {
  if (auto s = require(z && out, "null argument")) return s;
  return guarded([&] {
    auto q = mvgeo::make_quadrature(z->z.dim(), quad_level, seed);
    *out = mvgeo::polar_volume(z->z, q);
  });
}

mvg_status mvg_run_command(const mvg_command_config* cfg, int* exit_code,
                           char** out_text) {
  if (auto s = require(cfg && exit_code && out_text, "null argument")) return s;
  if (auto s = require(cfg->command != nullptr, "command is required"))
    return s;
  return guarded([&] {
    mvgeo::CliConfig c;
    c.command = cfg->command;
    if (cfg->input) c.input = cfg->input;
    c.c1 = cfg->c1;
    c.c2 = cfg->c2;
    c.lambda_steps = cfg->lambda_steps;
    c.quad_level = cfg->quad_level;
    c.seed = cfg->seed;
    c.tol = cfg->tol;
    if (cfg->format) c.format = cfg->format;
    auto res = mvgeo::run_command(c);
    *exit_code = res.exit_code;
    *out_text = dup_string(res.output);
  });
}

void mvg_string_free(char* s) { delete[] s; }

}  // extern "C"
