#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mvgeo/error.hpp"

namespace mvgeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Facet of a polytope: outer unit normal and (n-1)-dimensional measure.
/// For bodies of intrinsic dimension n-1 lying in a hyperplane with unit
/// normal w, the facet list is {(w, A), (-w, A)} with A the relative volume.
struct Facet {
  Vec outer_normal;
  double measure = 0.0;
};

/// Plane {x : x . normal = offset}, normal has unit length.
struct Hyperplane {
  Vec normal;
  double offset = 0.0;
};

enum class Side { Positive, Negative, On };

/// Convex polytope in V-representation. Canonical: the vertex list holds
/// exactly the extreme points, sorted lexicographically. intrinsic_dim is
/// the affine rank of the vertex set; -1 encodes the empty body.
class Polytope {
 public:
  Polytope() = default;
  static Polytope empty(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int intrinsic_dim() const { return intrinsic_dim_; }
  bool is_empty() const { return intrinsic_dim_ < 0; }
  bool is_full_dimensional() const { return intrinsic_dim_ == ambient_dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  /// Max pairwise vertex distance (upper bound via centroid radius), 0 if empty.
  double diameter() const { return diameter_; }
  Vec centroid() const;

  friend Polytope convex_hull(const std::vector<Vec>& points);

 private:
  int ambient_dim_ = 0;
  int intrinsic_dim_ = -1;
  std::vector<Vec> vertices_;
  double diameter_ = 0.0;
};

/// Canonical hull of a point set. Throws EmptyInput on an empty list.
Polytope convex_hull(const std::vector<Vec>& points);

/// h(K,x) = max over vertices of x.v. Throws EmptyBody on the empty body.
double support(const Polytope& K, const Vec& x);

/// n-dimensional volume; 0 when intrinsic_dim < n.
double volume(const Polytope& K);

/// Volume of K within its own affine hull (intrinsic_dim-dimensional).
double relative_volume(const Polytope& K);

/// Facet data under the module conventions (empty for dim <= n-2).
std::vector<Facet> facets(const Polytope& K);

/// K | u^perp as a polytope embedded in R^n.
Polytope project(const Polytope& K, const Vec& u);

/// vol_{n-1}(K | u^perp), computed from the projected vertex hull.
double shadow_area(const Polytope& K, const Vec& u);

/// K cut by a halfspace (or sliced by the plane for Side::On).
Polytope intersect_halfspace(const Polytope& K, const Hyperplane& H, Side side);

/// Hull of {Mv : v vertex of K}; singular M gives a lower-dimensional image.
Polytope linear_image(const Polytope& K, const Mat& M);

/// conv({0} union K). Throws EmptyBody on the empty body.
Polytope conv_with_origin(const Polytope& K);

/// Membership test with tolerance relative to the body's diameter.
bool contains_point(const Polytope& K, const Vec& x, double rel_tol = 1e-9);
inline bool contains_origin(const Polytope& K, double rel_tol = 1e-9) {
  return !K.is_empty() && contains_point(K, Vec::Zero(K.ambient_dim()), rel_tol);
}

/// Unit normal of the affine hull of an (n-1)-dimensional body,
/// sign-normalized (first nonzero coordinate positive).
Vec affine_hull_normal(const Polytope& K);

/// Euclidean distance from x to the affine hull of K.
double distance_to_affine_hull(const Polytope& K, const Vec& x);

}  // namespace mvgeo
