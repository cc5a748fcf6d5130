#include "mvgeo/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hull.hpp"

namespace mvgeo {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

double point_set_diameter(const std::vector<Vec>& pts) {
  Vec c = Vec::Zero(pts[0].size());
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  double r = 0.0;
  for (const auto& p : pts) r = std::max(r, (p - c).norm());
  return 2.0 * r;
}

struct Frame {
  Vec origin;
  Mat basis;  // n x d, orthonormal columns
  int rank = 0;
};

Frame affine_frame(const std::vector<Vec>& pts, double scale) {
  const int n = static_cast<int>(pts[0].size());
  Frame fr;
  fr.origin = Vec::Zero(n);
  for (const auto& p : pts) fr.origin += p;
  fr.origin /= static_cast<double>(pts.size());
  Mat X(n, pts.size());
  for (size_t i = 0; i < pts.size(); ++i) X.col(i) = pts[i] - fr.origin;
  Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeFullU);
  // rank tolerance 1e-9 relative to the body's diameter
  const double tol = 1e-9 * std::max(scale, 1e-300);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  fr.rank = r;
  fr.basis = svd.matrixU().leftCols(r);
  return fr;
}

std::vector<Vec> to_local(const std::vector<Vec>& pts, const Frame& fr) {
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(fr.basis.transpose() * (p - fr.origin));
  return out;
}

Vec sign_normalized(Vec v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

}  // namespace

Polytope Polytope::empty(int ambient_dim) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  return p;
}

Vec Polytope::centroid() const {
  if (is_empty()) throw Error(ErrorCode::EmptyBody, "centroid of empty body");
  Vec c = Vec::Zero(ambient_dim_);
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

Polytope convex_hull(const std::vector<Vec>& points) {
  if (points.empty())
    throw Error(ErrorCode::EmptyInput, "convex_hull of empty point list");
  const int n = static_cast<int>(points[0].size());
  for (const auto& p : points)
    if (p.size() != n)
      throw Error(ErrorCode::InvalidDimension, "mixed ambient dimensions");

  const double diam = point_set_diameter(points);

  // dedup: 1e-12 absolute after normalizing coordinates to unit diameter
  const double dtol = 1e-12 * std::max(diam, 1.0);
  std::vector<Vec> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    bool dup = false;
    for (const auto& q : pts)
      if ((p - q).lpNorm<Eigen::Infinity>() <= dtol) {
        dup = true;
        break;
      }
    if (!dup) pts.push_back(p);
  }

  Polytope out;
  out.ambient_dim_ = n;
  Frame fr = affine_frame(pts, diam);
  out.intrinsic_dim_ = fr.rank;
  if (fr.rank == 0) {
    out.vertices_ = {pts[0]};
    out.diameter_ = 0.0;
    return out;
  }
  std::vector<int> ext =
      detail::extreme_points(to_local(pts, fr), fr.rank, diam);
  out.vertices_.reserve(ext.size());
  for (int i : ext) out.vertices_.push_back(pts[i]);
  std::sort(out.vertices_.begin(), out.vertices_.end(), lex_less);
  out.diameter_ = point_set_diameter(out.vertices_);
  return out;
}

double support(const Polytope& K, const Vec& x) {
  if (K.is_empty()) throw Error(ErrorCode::EmptyBody, "support of empty body");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : K.vertices()) best = std::max(best, x.dot(v));
  return best;
}

double relative_volume(const Polytope& K) {
  if (K.intrinsic_dim() <= 0) return 0.0;
  Frame fr = affine_frame(K.vertices(), K.diameter());
  return detail::point_set_volume(to_local(K.vertices(), fr), K.intrinsic_dim(),
                                  K.diameter());
}

double volume(const Polytope& K) {
  if (K.intrinsic_dim() < K.ambient_dim()) return 0.0;
  return relative_volume(K);
}

Vec affine_hull_normal(const Polytope& K) {
  const int n = K.ambient_dim();
  if (K.intrinsic_dim() != n - 1)
    throw Error(ErrorCode::WrongStratum, "body is not (n-1)-dimensional");
  Mat X(n, K.vertices().size());
  Vec c = K.centroid();
  for (size_t i = 0; i < K.vertices().size(); ++i)
    X.col(i) = K.vertices()[i] - c;
  Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeFullU);
  return sign_normalized(svd.matrixU().col(n - 1));
}

std::vector<Facet> facets(const Polytope& K) {
  const int n = K.ambient_dim();
  const int d = K.intrinsic_dim();
  std::vector<Facet> out;
  if (d <= n - 2) return out;  // measure is null there

  if (d == n - 1) {
    // flat-body convention: two antipodal facets carrying vol_{n-1}(K)
    Vec w = affine_hull_normal(K);
    double a = relative_volume(K);
    out.push_back({w, a});
    out.push_back({-w, a});
    return out;
  }

  if (n == 3) {
    std::vector<Eigen::Vector3d> q(K.vertices().size());
    for (size_t i = 0; i < q.size(); ++i) q[i] = K.vertices()[i];
    auto h = detail::hull3d(q, K.diameter());
    out.reserve(h.facets.size());
    for (const auto& f : h.facets) out.push_back({f.normal, f.area});
    return out;
  }

  // n in {4, 5}: brute-force enumeration (documented slow)
  auto fs = detail::facets_nd(K.vertices(), K.diameter());
  for (const auto& f : fs) {
    std::vector<Vec> fp;
    fp.reserve(f.on_ids.size());
    for (int i : f.on_ids) fp.push_back(K.vertices()[i]);
    Frame ff = affine_frame(fp, K.diameter());
    double a =
        detail::point_set_volume(to_local(fp, ff), n - 1, K.diameter());
    if (a > 0) out.push_back({f.normal, a});
  }
  return out;
}

Polytope project(const Polytope& K, const Vec& u) {
  if (K.is_empty()) return Polytope::empty(K.ambient_dim());
  std::vector<Vec> proj;
  proj.reserve(K.vertices().size());
  for (const auto& v : K.vertices()) proj.push_back(v - v.dot(u) * u);
  return convex_hull(proj);
}

double shadow_area(const Polytope& K, const Vec& u) {
  if (K.is_empty()) return 0.0;
  const int n = K.ambient_dim();
  // orthonormal basis of u^perp via full QR of u
  Eigen::HouseholderQR<Mat> qr(u);
  Mat Q = qr.householderQ();
  Mat B = Q.rightCols(n - 1);
  std::vector<Vec> local;
  local.reserve(K.vertices().size());
  for (const auto& v : K.vertices()) local.push_back(B.transpose() * v);
  return detail::point_set_volume(local, n - 1, std::max(K.diameter(), 1e-300));
}

Polytope intersect_halfspace(const Polytope& K, const Hyperplane& H,
                             Side side) {
  if (K.is_empty()) return Polytope::empty(K.ambient_dim());
  const double eps = 1e-12 * std::max(K.diameter(), 1.0);
  const auto& verts = K.vertices();
  std::vector<double> s(verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    s[i] = verts[i].dot(H.normal) - H.offset;

  std::vector<Vec> keep;
  for (size_t i = 0; i < verts.size(); ++i) {
    bool in = side == Side::Positive ? s[i] >= -eps
              : side == Side::Negative ? s[i] <= eps
                                       : std::abs(s[i]) <= eps;
    if (in) keep.push_back(verts[i]);
  }
  // crossing points of all vertex pairs; interior ones are absorbed by the hull
  for (size_t i = 0; i < verts.size(); ++i) {
    if (s[i] <= eps) continue;
    for (size_t j = 0; j < verts.size(); ++j) {
      if (s[j] >= -eps) continue;
      double t = s[i] / (s[i] - s[j]);
      keep.push_back(verts[i] + t * (verts[j] - verts[i]));
    }
  }
  if (keep.empty()) return Polytope::empty(K.ambient_dim());
  return convex_hull(keep);
}

Polytope linear_image(const Polytope& K, const Mat& M) {
  if (K.is_empty()) return Polytope::empty(K.ambient_dim());
  std::vector<Vec> img;
  img.reserve(K.vertices().size());
  for (const auto& v : K.vertices()) img.push_back(M * v);
  return convex_hull(img);
}

Polytope conv_with_origin(const Polytope& K) {
  if (K.is_empty())
    throw Error(ErrorCode::EmptyBody, "conv_with_origin of empty body");
  std::vector<Vec> pts = K.vertices();
  pts.push_back(Vec::Zero(K.ambient_dim()));
  return convex_hull(pts);
}

double distance_to_affine_hull(const Polytope& K, const Vec& x) {
  if (K.is_empty())
    throw Error(ErrorCode::EmptyBody, "affine hull of empty body");
  if (K.intrinsic_dim() == 0) return (x - K.vertices()[0]).norm();
  Frame fr = affine_frame(K.vertices(), K.diameter());
  Vec rel = x - fr.origin;
  return (rel - fr.basis * (fr.basis.transpose() * rel)).norm();
}

bool contains_point(const Polytope& K, const Vec& x, double rel_tol) {
  if (K.is_empty()) return false;
  const double tol = rel_tol * std::max(K.diameter(), 1.0);
  const int d = K.intrinsic_dim();
  if (d == 0) return (x - K.vertices()[0]).norm() <= tol;

  Frame fr = affine_frame(K.vertices(), K.diameter());
  Vec rel = x - fr.origin;
  Vec loc = fr.basis.transpose() * rel;
  if ((rel - fr.basis * loc).norm() > tol) return false;  // off the affine hull

  auto local = to_local(K.vertices(), fr);
  if (d == 1) {
    double lo = local[0](0), hi = lo;
    for (const auto& p : local) {
      lo = std::min(lo, p(0));
      hi = std::max(hi, p(0));
    }
    return loc(0) >= lo - tol && loc(0) <= hi + tol;
  }
  if (d == 2) {
    std::vector<Eigen::Vector2d> q(local.size());
    for (size_t i = 0; i < q.size(); ++i) q[i] = local[i];
    auto ccw = detail::hull2d(q, K.diameter());
    Eigen::Vector2d p = loc;
    const int k = static_cast<int>(ccw.size());
    for (int i = 0; i < k; ++i) {
      Eigen::Vector2d a = q[ccw[i]], b = q[ccw[(i + 1) % k]];
      Eigen::Vector2d e = b - a;
      if (e.x() * (p.y() - a.y()) - e.y() * (p.x() - a.x()) < -tol * e.norm())
        return false;
    }
    return true;
  }
  if (d == 3) {
    std::vector<Eigen::Vector3d> q(local.size());
    for (size_t i = 0; i < q.size(); ++i) q[i] = local[i];
    auto h = detail::hull3d(q, K.diameter());
    for (const auto& f : h.facets)
      if (f.normal.dot(Eigen::Vector3d(loc)) - f.offset > tol) return false;
    return true;
  }
  auto fs = detail::facets_nd(local, K.diameter());
  for (const auto& f : fs)
    if (f.normal.dot(loc) - f.offset > tol) return false;
  return true;
}

}  // namespace mvgeo
