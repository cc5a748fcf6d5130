#pragma once

#include <functional>

#include "mvgeo/polytope.hpp"
#include "mvgeo/quadrature.hpp"
#include "mvgeo/zonotope.hpp"

namespace mvgeo {

/// Immutable support-function closure. `eval_batch` maps a matrix of unit
/// row directions to the vector of support values; it exists so the
/// million-node quadratures below stay cheap.
struct SupportOracle {
  int dim = 0;
  bool positive = false;  // h > 0 everywhere, i.e. 0 interior
  std::function<double(const Vec&)> eval;
  std::function<Vec(const Mat&)> eval_batch;
};

/// Radial-function closure, same batch convention.
struct RadialOracle {
  int dim = 0;
  std::function<double(const Vec&)> eval;
  std::function<Vec(const Mat&)> eval_batch;
};

SupportOracle support_oracle(const Zonotope& z);
SupportOracle support_oracle(const Polytope& K);
/// Exact oracle of the ellipsoid A * B: h(u) = |A^T u|.
SupportOracle ellipsoid_support_oracle(const Mat& A);

/// rho(K*, u) = 1 / h(K, u). Throws OriginNotInterior when the positivity
/// flag is unset.
RadialOracle polar_radial(const SupportOracle& h);

/// (1/n) sum_j w_j rho(u_j)^n
double star_volume(const RadialOracle& rho, const SphericalQuadrature& q);

/// star_volume of the polar; 0 must be interior.
double polar_volume(const SupportOracle& h, const SphericalQuadrature& q);
double polar_volume(const Zonotope& z, const SphericalQuadrature& q);

/// Harmonic combination u -> (alpha/rho_K + beta/rho_L)^{-1} of Eq. (2.3).
RadialOracle harmonic_combination(double alpha, const RadialOracle& K,
                                  double beta, const RadialOracle& L);

/// V(K +^ L)^{-1/n} - V(K)^{-1/n} - V(L)^{-1/n}; >= -eps_quad for convex
/// inputs, 0 up to quadrature error iff K and L are dilates.
double dual_bm_gap(const RadialOracle& K, const RadialOracle& L,
                   const SphericalQuadrature& q);

}  // namespace mvgeo
