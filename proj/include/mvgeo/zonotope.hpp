#pragma once

#include <vector>

#include "mvgeo/polytope.hpp"

namespace mvgeo {

/// Origin-symmetric zonotope sum_i [-g_i, g_i], kept in canonical form:
/// no zero generators, no parallel pair, each generator sign-normalized
/// (first nonzero coordinate positive), list sorted lexicographically.
class Zonotope {
 public:
  Zonotope() = default;
  explicit Zonotope(int dim) : dim_(dim) {}
  static Zonotope from_generators(int dim, std::vector<Vec> gens);

  int dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return gens_; }
  bool is_origin() const { return gens_.empty(); }

  /// h(Z,u) = sum |u.g_i|
  double support(const Vec& u) const;
  /// Support values for many directions at once (rows of `dirs`).
  Vec support_batch(const Mat& dirs) const;

  /// Diameter bound 2 sum |g_i| (exact in some direction).
  double diameter() const;
  /// True iff the generators span the ambient space (0 interior).
  bool full_dimensional() const;

 private:
  int dim_ = 0;
  std::vector<Vec> gens_;
};

Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b);
Zonotope scale(const Zonotope& z, double c);

/// |det M| M^{-T} applied to every generator. Throws SingularMatrix.
Zonotope contravariant_image(const Zonotope& z, const Mat& M);

/// Largest net generator discrepancy between the canonical generating
/// measures of the two zonotopes (absolute, same units as the generators).
double zonotope_residual(const Zonotope& a, const Zonotope& b);

/// Equality of canonical generators within tol after diameter normalization.
bool zonotope_equal(const Zonotope& a, const Zonotope& b, double tol);

}  // namespace mvgeo
