/* C interface of the valuation-geometry library: opaque handles, status
 * codes, and strings allocated by the library (release with
 * mvg_string_free). All functions are thread-compatible; the last-error
 * message is thread-local. */

#ifndef MVGEO_CAPI_H
#define MVGEO_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mvg_status {
  MVG_OK = 0,
  MVG_ERR_EMPTY_INPUT = 1,
  MVG_ERR_EMPTY_BODY = 2,
  MVG_ERR_INVALID_PARAMS = 3,
  MVG_ERR_SINGULAR_MATRIX = 4,
  MVG_ERR_ORIGIN_NOT_INTERIOR = 5,
  MVG_ERR_DEGENERATE_RADIAL = 6,
  MVG_ERR_DEGENERATE_BODY = 7,
  MVG_ERR_WRONG_STRATUM = 8,
  MVG_ERR_INVALID_DIMENSION = 9,
  MVG_ERR_PARSE = 10,
  MVG_ERR_INTERNAL = 11,
  MVG_ERR_UNKNOWN = 12
} mvg_status;

typedef struct mvg_polytope mvg_polytope;
typedef struct mvg_zonotope mvg_zonotope;

/* Message of the most recent failure on this thread ("" if none). */
const char* mvg_last_error(void);

/* --- polytopes ------------------------------------------------------- */

/* Parse {"dim": n, "vertices": [[...], ...]}; redundant points are
 * canonicalized away. */
mvg_status mvg_polytope_from_json(const char* json, mvg_polytope** out);
mvg_status mvg_polytope_to_json(const mvg_polytope* p, char** out_json);
mvg_status mvg_polytope_volume(const mvg_polytope* p, double* out);
mvg_status mvg_polytope_dim(const mvg_polytope* p, int* ambient,
                            int* intrinsic);
void mvg_polytope_free(mvg_polytope* p);

/* --- the valuation family ------------------------------------------- */

/* Phi = c1 Pi + c2 Pi_o applied to the body; c1, c2 >= 0. */
mvg_status mvg_phi(const mvg_polytope* p, double c1, double c2,
                   mvg_zonotope** out);

mvg_status mvg_zonotope_to_json(const mvg_zonotope* z, char** out_json);
mvg_status mvg_zonotope_from_json(const char* json, mvg_zonotope** out);
/* h(Z,u) for a direction of length dim. */
mvg_status mvg_zonotope_support(const mvg_zonotope* z, const double* u,
                                int dim, double* out);
void mvg_zonotope_free(mvg_zonotope* z);

/* Volume of the polar body via spherical quadrature; the zonotope must be
 * full-dimensional. */
mvg_status mvg_polar_volume(const mvg_zonotope* z, int quad_level,
                            unsigned long long seed, double* out);

/* --- high-level commands (what the CLI runs) ------------------------- */

typedef struct mvg_command_config {
  const char* command; /* compute | verify | sweep | petty */
  const char* input;   /* polytope JSON path; may be NULL for verify */
  double c1;
  double c2;
  int lambda_steps;
  int quad_level;
  unsigned long long seed;
  double tol;
  const char* format; /* json | csv */
} mvg_command_config;

/* Runs a command; *out_text receives the full output document and
 * *exit_code the process exit status the caller should use. */
mvg_status mvg_run_command(const mvg_command_config* cfg, int* exit_code,
                           char** out_text);

void mvg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MVGEO_CAPI_H */
