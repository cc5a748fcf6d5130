#pragma once

// Internal hull machinery: 2-D monotone chain, 3-D incremental quickhull,
// and brute-force facet enumeration for ambient dimensions 4 and 5.

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace mvgeo::detail {

// Indices of the hull vertices in counter-clockwise order; collinear
// boundary points are dropped.
std::vector<int> hull2d(const std::vector<Eigen::Vector2d>& pts, double scale);

double polygon_area(const std::vector<Eigen::Vector2d>& pts,
                    const std::vector<int>& ccw);

struct Hull3D {
  struct Facet {
    Eigen::Vector3d normal;  // outward unit normal
    double offset = 0.0;     // normal . x = offset on the facet plane
    double area = 0.0;
    std::vector<int> vertex_ids;
  };
  std::vector<std::array<int, 3>> triangles;  // outward oriented
  std::vector<Facet> facets;                  // coplanar triangles merged
  std::vector<int> extreme;                   // true vertices of the hull
  double volume = 0.0;
};

// Full-dimensional 3-D hull. `scale` is the diameter of the point set;
// tolerances are relative to it. Throws mvgeo::Error(Internal) if the
// points are not full-dimensional within tolerance.
Hull3D hull3d(const std::vector<Eigen::Vector3d>& pts, double scale);

struct NdFacet {
  Eigen::VectorXd normal;  // outward unit normal
  double offset = 0.0;
  std::vector<int> on_ids;  // points on the facet hyperplane
};

// Brute-force facet enumeration for a full-dimensional point set in R^d,
// d in {4, 5}. O(m^d); meant for desk-scale vertex counts only.
std::vector<NdFacet> facets_nd(const std::vector<Eigen::VectorXd>& pts,
                               double scale);

// d-dimensional volume of the hull of a point set given in d coordinates
// (rank may be lower; returns 0 then).
double point_set_volume(const std::vector<Eigen::VectorXd>& pts, int d,
                        double scale);

// Indices of the extreme points of a d-dimensional point set (full rank d
// assumed within tolerance).
std::vector<int> extreme_points(const std::vector<Eigen::VectorXd>& pts, int d,
                                double scale);

}  // namespace mvgeo::detail
