#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvgeo/polytope.hpp"
#include "mvgeo/quadrature.hpp"
#include "mvgeo/valuation.hpp"

namespace mvgeo {

/// Two-piece halfspace dissection of a convex body: K+ u K- = body,
/// K+ n K- = K0 = body n plane.
struct DissectionCase {
  Polytope body;
  Hyperplane plane;
  Polytope k_plus;
  Polytope k_minus;
  Polytope k_zero;
  std::string provenance;  // "random-cut" or "prop6(lambda,i,j)"
};

DissectionCase make_dissection(const Polytope& body, const Hyperplane& plane,
                               std::string provenance);

struct CheckReport {
  std::string name;
  std::string params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool inconclusive = false;  // inside the equality/strictness margin band
  std::string witness;        // offending inputs when failing
  std::uint64_t seed = 0;
};

/// phi(K+) + phi(K-) = phi(body) + phi(K0) on canonical generators.
CheckReport check_valuation_identity(const DissectionCase& c,
                                     const ValuationParams& p,
                                     double tol = 1e-9);

/// phi(MK) = |det M| M^{-T} phi(K); requires det M > 0.
CheckReport check_contravariance(const Polytope& K, const Mat& M,
                                 const ValuationParams& p, double tol = 1e-8);

/// Dimension-stratified degeneracy laws for bodies of intrinsic dimension
/// <= n-1. Throws WrongStratum for full-dimensional input.
CheckReport check_lemma5(const Polytope& K, const ValuationParams& p,
                         double tol = 1e-9);

/// The signed measure rho of the standard simplex has a strictly negative
/// atom at -(1,..,1)/sqrt(n) of weight -(c2/2) vol_{n-1}(P) whenever c2 > 0.
CheckReport check_rho_obstruction(double c1, double c2, int n = 3,
                                  double tol = 1e-12);

/// Inequality chain for Phi_lambda = lambda Pi + (1-lambda) Pi_o:
/// (a) harmonic-decomposition volume inequality, (b) V(Pi_o*) <= V(Pi*)
/// with equality iff 0 in K, (c) V(Phi*) <= V(Pi*), (d) the Petty-type
/// product against the ball bound. Throws DegenerateBody for flat K.
CheckReport check_theorem8_chain(const Polytope& K, double lambda,
                                 const SphericalQuadrature& q,
                                 double tol = 1e-5);

struct SuiteConfig {
  std::uint64_t seed = 42;
  int quad_level = 5;
  int dissection_cases = 500;
  int contravariance_cases = 200;
  int lemma5_per_stratum = 50;
  int rho_cases = 10;
  int chain_bodies = 100;
  int dual_bm_pairs = 100;
  int dilate_pairs = 20;
  double tol_exact = 1e-9;
  double tol_contra = 1e-8;
  double tol_quad = 1e-5;
};

/// Deterministic in the seed: every case draws from its own substream.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

/// Random-model helpers shared with the acceptance battery.
Polytope random_polytope(std::uint64_t seed, int min_pts = 4, int max_pts = 30,
                         bool translate = false);
Mat random_matrix_det_pos(std::uint64_t seed, int n, double max_cond = 100.0);

/// Standard simplex conv{e_1,...,e_n}.
Polytope standard_simplex(int n);
/// Proposition 6 data for conv{e_1,e_2,e_3}: the cutting hyperplane and the
/// two linear maps whose images are the pieces.
Hyperplane prop6_plane(double lambda, int i, int j);
Mat prop6_phi_map(double lambda, int i, int j);
Mat prop6_psi_map(double lambda, int i, int j);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace mvgeo
