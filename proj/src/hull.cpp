#include "hull.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "mvgeo/error.hpp"

namespace mvgeo::detail {

using Eigen::Vector2d;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

double cross2(const Vector2d& o, const Vector2d& a, const Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace

std::vector<int> hull2d(const std::vector<Vector2d>& pts, double scale) {
  const int m = static_cast<int>(pts.size());
  if (m == 1) return {0};
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts[a].x() != pts[b].x()) return pts[a].x() < pts[b].x();
    return pts[a].y() < pts[b].y();
  });
  // collinear points are popped (strict corners only)
  const double tol = 1e-12 * scale * scale;
  std::vector<int> h(2 * m);
  int k = 0;
  for (int ii = 0; ii < m; ++ii) {
    int i = idx[ii];
    while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= tol) --k;
    h[k++] = i;
  }
  int lower = k + 1;
  for (int ii = m - 2; ii >= 0; --ii) {
    int i = idx[ii];
    while (k >= lower && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= tol)
      --k;
    h[k++] = i;
  }
  h.resize(k > 1 ? k - 1 : 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

double polygon_area(const std::vector<Vector2d>& pts,
                    const std::vector<int>& ccw) {
  double a = 0.0;
  const int k = static_cast<int>(ccw.size());
  for (int i = 0; i < k; ++i) {
    const Vector2d& p = pts[ccw[i]];
    const Vector2d& q = pts[ccw[(i + 1) % k]];
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * std::abs(a);
}

namespace {

struct QhFace {
  std::array<int, 3> v;
  std::array<int, 3> nb{-1, -1, -1};  // across edge v[i] -> v[(i+1)%3]
  Vector3d n;
  double off = 0.0;
  std::vector<int> outside;
  int far_pt = -1;
  double far_dist = 0.0;
  bool alive = true;
};

struct QuickHull {
  const std::vector<Vector3d>& pts;
  double eps;
  Vector3d interior;
  std::vector<QhFace> faces;
  std::queue<int> pending;
  std::vector<int> mark;  // visit stamps
  int stamp = 0;

  explicit QuickHull(const std::vector<Vector3d>& p, double scale)
      : pts(p), eps(1e-10 * scale) {}

  int make_face(int a, int b, int c) {
    QhFace f;
    f.v = {a, b, c};
    Vector3d n = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    if (n.dot(interior - pts[a]) > 0) {
      std::swap(f.v[1], f.v[2]);
      n = -n;
    }
    double len = n.norm();
    f.n = len > 0 ? Vector3d(n / len) : Vector3d::UnitZ();
    f.off = f.n.dot(pts[f.v[0]]);
    faces.push_back(std::move(f));
    return static_cast<int>(faces.size()) - 1;
  }

  void wire(const std::vector<int>& fresh) {
    std::map<std::pair<int, int>, std::pair<int, int>> edge;  // directed
    for (int fi : fresh) {
      const auto& v = faces[fi].v;
      for (int e = 0; e < 3; ++e)
        edge[{v[e], v[(e + 1) % 3]}] = {fi, e};
    }
    for (int fi : fresh) {
      auto& f = faces[fi];
      for (int e = 0; e < 3; ++e) {
        if (f.nb[e] >= 0) continue;
        auto it = edge.find({f.v[(e + 1) % 3], f.v[e]});
        if (it == edge.end()) throw Error(ErrorCode::Internal, "open hull edge");
        f.nb[e] = it->second.first;
      }
    }
  }

  void assign_outside(const std::vector<int>& cand,
                      const std::vector<int>& fresh) {
    for (int p : cand) {
      int best = -1;
      double best_d = eps;
      for (int fi : fresh) {
        double d = faces[fi].n.dot(pts[p]) - faces[fi].off;
        if (d > best_d) {
          best_d = d;
          best = fi;
        }
      }
      if (best < 0) continue;
      auto& f = faces[best];
      f.outside.push_back(p);
      if (best_d > f.far_dist) {
        f.far_dist = best_d;
        f.far_pt = p;
      }
    }
  }

  void initial_simplex() {
    const int m = static_cast<int>(pts.size());
    // extremes along the widest axis
    int i0 = 0, i1 = 0;
    double best_ext = -1.0;
    for (int ax = 0; ax < 3; ++ax) {
      int lo = 0, hi = 0;
      for (int i = 1; i < m; ++i) {
        if (pts[i][ax] < pts[lo][ax]) lo = i;
        if (pts[i][ax] > pts[hi][ax]) hi = i;
      }
      double ext = pts[hi][ax] - pts[lo][ax];
      if (ext > best_ext) {
        best_ext = ext;
        i0 = lo;
        i1 = hi;
      }
    }
    Vector3d d01 = pts[i1] - pts[i0];
    int i2 = -1;
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
      double d = d01.cross(pts[i] - pts[i0]).norm();
      if (d > best) {
        best = d;
        i2 = i;
      }
    }
    if (i2 < 0 || best <= eps * d01.norm())
      throw Error(ErrorCode::Internal, "degenerate 3-D hull input");
    Vector3d n = d01.cross(pts[i2] - pts[i0]).normalized();
    int i3 = -1;
    best = 0.0;
    for (int i = 0; i < m; ++i) {
      double d = std::abs(n.dot(pts[i] - pts[i0]));
      if (d > best) {
        best = d;
        i3 = i;
      }
    }
    if (i3 < 0 || best <= eps)
      throw Error(ErrorCode::Internal, "degenerate 3-D hull input");

    interior = 0.25 * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);
    std::vector<int> fresh;
    fresh.push_back(make_face(i0, i1, i2));
    fresh.push_back(make_face(i0, i1, i3));
    fresh.push_back(make_face(i0, i2, i3));
    fresh.push_back(make_face(i1, i2, i3));
    wire(fresh);
    std::vector<int> cand;
    cand.reserve(m);
    for (int i = 0; i < m; ++i)
      if (i != i0 && i != i1 && i != i2 && i != i3) cand.push_back(i);
    assign_outside(cand, fresh);
    for (int fi : fresh)
      if (!faces[fi].outside.empty()) pending.push(fi);
  }

  void run() {
    initial_simplex();
    mark.assign(1024, 0);
    while (!pending.empty()) {
      int fi = pending.front();
      pending.pop();
      if (!faces[fi].alive || faces[fi].outside.empty()) continue;
      const int apex = faces[fi].far_pt;
      const Vector3d ap = pts[apex];

      // visible region (flood fill)
      if (mark.size() < faces.size()) mark.resize(faces.size() * 2, 0);
      ++stamp;
      std::vector<int> visible;
      std::vector<int> stack{fi};
      mark[fi] = stamp;
      while (!stack.empty()) {
        int g = stack.back();
        stack.pop_back();
        visible.push_back(g);
        for (int e = 0; e < 3; ++e) {
          int h = faces[g].nb[e];
          if (mark[h] == stamp) continue;
          if (faces[h].n.dot(ap) - faces[h].off > eps) {
            mark[h] = stamp;
            stack.push_back(h);
          }
        }
      }

      // horizon edges and orphaned outside points
      std::vector<std::array<int, 3>> horizon;  // a, b, invisible neighbor
      std::vector<int> orphans;
      for (int g : visible) {
        auto& fg = faces[g];
        fg.alive = false;
        for (int p : fg.outside)
          if (p != apex) orphans.push_back(p);
        fg.outside.clear();
        for (int e = 0; e < 3; ++e) {
          int h = fg.nb[e];
          if (mark[h] != stamp)
            horizon.push_back({fg.v[e], fg.v[(e + 1) % 3], h});
        }
      }

      std::vector<int> fresh;
      fresh.reserve(horizon.size());
      for (const auto& [a, b, h] : horizon) {
        int nf = make_face(a, b, apex);
        // stitch to the surviving neighbor across (a, b)
        auto& fh = faces[h];
        for (int e = 0; e < 3; ++e)
          if (fh.v[e] == b && fh.v[(e + 1) % 3] == a) fh.nb[e] = nf;
        auto& fn = faces[nf];
        for (int e = 0; e < 3; ++e) {
          int p = fn.v[e], q = fn.v[(e + 1) % 3];
          if ((p == a && q == b) || (p == b && q == a)) fn.nb[e] = h;
        }
        fresh.push_back(nf);
      }
      if (mark.size() < faces.size()) mark.resize(faces.size() * 2, 0);
      wire(fresh);
      assign_outside(orphans, fresh);
      for (int nf : fresh)
        if (!faces[nf].outside.empty()) pending.push(nf);
    }
  }
};

}  // namespace

Hull3D hull3d(const std::vector<Vector3d>& pts, double scale) {
  QuickHull qh(pts, scale);
  qh.run();

  Hull3D out;
  struct Tri {
    std::array<int, 3> v;
    Vector3d n;
    double off;
    double area;
  };
  std::vector<Tri> tris;
  const double sliver = 1e-16 * scale * scale;
  for (const auto& f : qh.faces) {
    if (!f.alive) continue;
    Vector3d c = (pts[f.v[1]] - pts[f.v[0]]).cross(pts[f.v[2]] - pts[f.v[0]]);
    double area = 0.5 * c.norm();
    out.triangles.push_back(f.v);
    if (area <= sliver) continue;
    Vector3d n = c.normalized();
    tris.push_back({f.v, n, n.dot(pts[f.v[0]]), area});
  }

  // merge coplanar triangles into geometric facets
  std::vector<int> order(tris.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto &ta = tris[a], &tb = tris[b];
    for (int k = 0; k < 3; ++k)
      if (ta.n[k] != tb.n[k]) return ta.n[k] < tb.n[k];
    return ta.off < tb.off;
  });
  const double ntol = 1e-9;
  const double otol = 1e-9 * scale;
  std::vector<std::vector<int>> groups;
  for (int id : order) {
    bool fresh_group = groups.empty();
    if (!fresh_group) {
      const Tri& rep = tris[groups.back().front()];
      const Tri& t = tris[id];
      fresh_group = (t.n - rep.n).cwiseAbs().maxCoeff() > ntol ||
                    std::abs(t.off - rep.off) > otol;
    }
    if (fresh_group) groups.emplace_back();
    groups.back().push_back(id);
  }

  std::vector<std::vector<int>> vertex_facets;  // facet ids per point id
  vertex_facets.resize(pts.size());
  for (const auto& g : groups) {
    Hull3D::Facet fc;
    Vector3d n = Vector3d::Zero();
    double off = 0.0;
    std::set<int> vids;
    for (int id : g) {
      const Tri& t = tris[id];
      fc.area += t.area;
      n += t.area * t.n;
      off += t.area * t.off;
      vids.insert(t.v.begin(), t.v.end());
    }
    fc.normal = n.normalized();
    fc.offset = off / fc.area;
    fc.vertex_ids.assign(vids.begin(), vids.end());
    int fid = static_cast<int>(out.facets.size());
    for (int v : fc.vertex_ids) vertex_facets[v].push_back(fid);
    out.facets.push_back(std::move(fc));
  }

  // a point is extreme iff its incident facet normals span R^3
  for (int v = 0; v < static_cast<int>(pts.size()); ++v) {
    const auto& fs = vertex_facets[v];
    if (fs.size() < 3) continue;
    Eigen::Matrix<double, 3, Eigen::Dynamic> N(3, fs.size());
    for (size_t j = 0; j < fs.size(); ++j)
      N.col(j) = out.facets[fs[j]].normal;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(N);
    if (svd.singularValues()(2) > 1e-7) out.extreme.push_back(v);
  }

  if (out.extreme.empty())
    throw Error(ErrorCode::Internal, "3-D hull produced no vertices");
  Vector3d c = Vector3d::Zero();
  for (int v : out.extreme) c += pts[v];
  c /= static_cast<double>(out.extreme.size());
  for (const auto& fc : out.facets)
    out.volume += fc.area * (fc.offset - fc.normal.dot(c));
  out.volume /= 3.0;
  return out;
}

namespace {

// orthonormal basis of the affine hull plus rank, via SVD of centered points
struct Frame {
  VectorXd origin;
  Eigen::MatrixXd basis;  // d columns
  int rank = 0;
};

Frame affine_frame(const std::vector<VectorXd>& pts, double scale,
                   double rel_tol = 1e-9) {
  const int n = static_cast<int>(pts[0].size());
  Frame fr;
  fr.origin = VectorXd::Zero(n);
  for (const auto& p : pts) fr.origin += p;
  fr.origin /= static_cast<double>(pts.size());
  Eigen::MatrixXd X(n, pts.size());
  for (size_t i = 0; i < pts.size(); ++i) X.col(i) = pts[i] - fr.origin;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU);
  const double tol = rel_tol * std::max(scale, 1e-300);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  fr.rank = r;
  fr.basis = svd.matrixU().leftCols(r);
  return fr;
}

std::vector<VectorXd> local_coords(const std::vector<VectorXd>& pts,
                                   const Frame& fr) {
  std::vector<VectorXd> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(fr.basis.transpose() * (p - fr.origin));
  return out;
}

}  // namespace

std::vector<NdFacet> facets_nd(const std::vector<VectorXd>& pts, double scale) {
  const int d = static_cast<int>(pts[0].size());
  const int m = static_cast<int>(pts.size());
  const double eps = 1e-9 * scale;
  std::vector<NdFacet> out;
  std::set<std::vector<int>> seen;

  std::vector<int> comb(d);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == d) {
      Eigen::MatrixXd A(d - 1, d);
      for (int i = 1; i < d; ++i)
        A.row(i - 1) = (pts[comb[i]] - pts[comb[0]]).transpose();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
      if (svd.singularValues()(d - 2) <= eps) return;  // degenerate d-tuple
      VectorXd nrm = svd.matrixV().col(d - 1);
      double off = nrm.dot(pts[comb[0]]);
      double lo = 0.0, hi = 0.0;
      for (int i = 0; i < m; ++i) {
        double s = nrm.dot(pts[i]) - off;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      if (lo < -eps && hi > eps) return;  // not supporting
      if (hi > eps) {
        nrm = -nrm;
        off = -off;
      }
      std::vector<int> on;
      for (int i = 0; i < m; ++i)
        if (std::abs(nrm.dot(pts[i]) - off) <= eps) on.push_back(i);
      if (seen.insert(on).second) out.push_back({nrm, off, on});
      return;
    }
    for (int i = start; i <= m - (d - k); ++i) {
      comb[k] = i;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  return out;
}

double point_set_volume(const std::vector<VectorXd>& pts, int d, double scale) {
  if (pts.empty() || d <= 0) return 0.0;
  if (d == 1) {
    double lo = pts[0](0), hi = lo;
    for (const auto& p : pts) {
      lo = std::min(lo, p(0));
      hi = std::max(hi, p(0));
    }
    return hi - lo;
  }
  // rank guard: lower-dimensional sets have zero d-volume
  Frame fr = affine_frame(pts, scale);
  if (fr.rank < d) return 0.0;
  if (d == 2) {
    std::vector<Vector2d> q(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) q[i] = pts[i].head<2>();
    return polygon_area(q, hull2d(q, scale));
  }
  if (d == 3) {
    std::vector<Vector3d> q(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) q[i] = pts[i].head<3>();
    return hull3d(q, scale).volume;
  }
  auto fs = facets_nd(pts, scale);
  VectorXd c = VectorXd::Zero(d);
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  double vol = 0.0;
  for (const auto& f : fs) {
    std::vector<VectorXd> fp;
    fp.reserve(f.on_ids.size());
    for (int i : f.on_ids) fp.push_back(pts[i]);
    Frame ff = affine_frame(fp, scale);
    double a = point_set_volume(local_coords(fp, ff), d - 1, scale);
    vol += a * std::abs(f.offset - f.normal.dot(c));
  }
  return vol / d;
}

std::vector<int> extreme_points(const std::vector<VectorXd>& pts, int d,
                                double scale) {
  if (d <= 0) return {0};
  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
      if (pts[i](0) < pts[lo](0)) lo = i;
      if (pts[i](0) > pts[hi](0)) hi = i;
    }
    if (lo == hi) return {lo};
    return {lo, hi};
  }
  if (d == 2) {
    std::vector<Vector2d> q(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) q[i] = pts[i].head<2>();
    return hull2d(q, scale);
  }
  if (d == 3) {
    std::vector<Vector3d> q(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) q[i] = pts[i].head<3>();
    return hull3d(q, scale).extreme;
  }
  auto fs = facets_nd(pts, scale);
  std::set<int> ext;
  for (const auto& f : fs) {
    std::vector<VectorXd> fp;
    fp.reserve(f.on_ids.size());
    for (int i : f.on_ids) fp.push_back(pts[i]);
    Frame ff = affine_frame(fp, scale);
    for (int j : extreme_points(local_coords(fp, ff), ff.rank, scale))
      ext.insert(f.on_ids[j]);
  }
  return {ext.begin(), ext.end()};
}

}  // namespace mvgeo::detail
