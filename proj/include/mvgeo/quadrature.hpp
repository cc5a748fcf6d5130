#pragma once

#include <cstdint>

#include "mvgeo/polytope.hpp"

namespace mvgeo {

/// Nodes and positive weights on S^{n-1}; weights sum to the surface area
/// of the sphere and the node set is antipodally symmetric.
struct SphericalQuadrature {
  int dim = 0;
  int level = 0;
  Mat nodes;    // one unit row vector per node
  Vec weights;  // positive, same length as nodes.rows()

  Eigen::Index size() const { return weights.size(); }
  /// Leaf spherical triangles of the subdivision (n = 3 only).
  long triangle_count() const { return 20L << (2 * level); }
};

/// n = 3: icosahedral subdivision of depth `level`, deterministic; each leaf
/// triangle is integrated by a composite degree-10 rule lifted to the sphere
/// with per-piece weights matching the exact spherical areas. n >= 4:
/// antipodally symmetrized Monte Carlo, 10^level * 1000 node pairs from the
/// seeded generator, equal weights. Throws InvalidDimension for n < 3.
SphericalQuadrature make_quadrature(int n, int level, std::uint64_t seed);

/// Vertices of the icosahedral geodesic sphere of the given subdivision
/// depth, one unit row vector each (12, 42, 162, ... points).
Mat icosphere_vertices(int level);

/// Fixed-order pairwise sum of w(i) * f(i); bit-stable for a given ordering.
double pairwise_dot(const Vec& w, const Vec& f);

/// Surface area of S^{n-1}.
double sphere_area(int n);

/// Volume kappa_n of the n-dimensional unit ball.
double ball_volume(int n);

}  // namespace mvgeo
