#include "mvgeo/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace mvgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

using V3 = Eigen::Vector3d;
using Tri = std::array<int, 3>;

// regular icosahedron, faces consistent with the antipodal symmetry of the
// vertex set (v present => -v present, face present => antipodal face present)
void icosahedron(std::vector<V3>& verts, std::vector<Tri>& faces) {
  const double p = (1.0 + std::sqrt(5.0)) / 2.0;
  verts.clear();
  for (double a : {-1.0, 1.0})
    for (double b : {-p, p}) {
      verts.emplace_back(0, a, b);
      verts.emplace_back(a, b, 0);
      verts.emplace_back(b, 0, a);
    }
  for (auto& v : verts) v.normalize();
  // faces: triples at mutual edge distance; edge^2 = 4/(p^2+1) after
  // normalization
  faces.clear();
  const double e2 = 4.0 / (p * p + 1.0);
  auto adjacent = [&](int i, int j) {
    return std::abs((verts[i] - verts[j]).squaredNorm() - e2) < 1e-9;
  };
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      if (!adjacent(i, j)) continue;
      for (int k = j + 1; k < 12; ++k)
        if (adjacent(i, k) && adjacent(j, k)) faces.push_back({i, j, k});
    }
}

void subdivide(std::vector<V3>& verts, std::vector<Tri>& faces) {
  std::map<std::pair<int, int>, int> mid;
  auto midpoint = [&](int i, int j) {
    auto key = std::minmax(i, j);
    auto it = mid.find(key);
    if (it != mid.end()) return it->second;
    V3 m = (verts[i] + verts[j]).normalized();
    int id = static_cast<int>(verts.size());
    verts.push_back(m);
    mid.emplace(key, id);
    return id;
  };
  std::vector<Tri> out;
  out.reserve(4 * faces.size());
  for (const auto& t : faces) {
    int ab = midpoint(t[0], t[1]);
    int bc = midpoint(t[1], t[2]);
    int ca = midpoint(t[2], t[0]);
    out.push_back({t[0], ab, ca});
    out.push_back({ab, t[1], bc});
    out.push_back({ca, bc, t[2]});
    out.push_back({ab, bc, ca});
  }
  faces = std::move(out);
}

// Van Oosterom-Strackee solid angle of the spherical triangle abc
double spherical_area(const V3& a, const V3& b, const V3& c) {
  double num = std::abs(a.dot(b.cross(c)));
  double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

struct PlanarRule {
  std::vector<double> w;                       // barycentric-measure weights
  std::vector<std::array<double, 3>> b;        // barycentric points
};

// Dunavant's 25-point degree-10 rule for the triangle
PlanarRule dunavant10() {
  struct Orbit {
    double w;
    std::array<double, 3> b;
    int size;  // 1, 3, or 6
  };
  const Orbit orbits[] = {
      {0.090817990382754,
       {0.333333333333333, 0.333333333333333, 0.333333333333333}, 1},
      {0.036725957756467,
       {0.028844733232685, 0.485577633383657, 0.485577633383657}, 3},
      {0.045321059435528,
       {0.781036849029926, 0.109481575485037, 0.109481575485037}, 3},
      {0.072757916845420,
       {0.141707219414880, 0.307939838764121, 0.550352941820999}, 6},
      {0.028327242531057,
       {0.025003534762686, 0.246672560639903, 0.728323904597411}, 6},
      {0.009421666963733,
       {0.009540815400299, 0.066803251012200, 0.923655933587500}, 6},
  };
  PlanarRule r;
  for (const auto& o : orbits) {
    auto push = [&](double x, double y, double z) {
      r.w.push_back(o.w);
      r.b.push_back({x, y, z});
    };
    const auto& b = o.b;
    if (o.size == 1) {
      push(b[0], b[1], b[2]);
    } else if (o.size == 3) {
      push(b[0], b[1], b[2]);
      push(b[1], b[2], b[0]);
      push(b[2], b[0], b[1]);
    } else {
      push(b[0], b[1], b[2]);
      push(b[0], b[2], b[1]);
      push(b[1], b[0], b[2]);
      push(b[1], b[2], b[0]);
      push(b[2], b[0], b[1]);
      push(b[2], b[1], b[0]);
    }
  }
  return r;
}

SphericalQuadrature icosahedral(int level) {
  std::vector<V3> verts;
  std::vector<Tri> faces;
  icosahedron(verts, faces);
  // one extra subdivision: a composite 4-piece rule per leaf triangle
  for (int i = 0; i < level + 1; ++i) subdivide(verts, faces);

  const PlanarRule rule = dunavant10();
  const int m = static_cast<int>(rule.w.size());

  SphericalQuadrature q;
  q.dim = 3;
  q.level = level;
  q.nodes.resize(static_cast<Eigen::Index>(faces.size()) * m, 3);
  q.weights.resize(q.nodes.rows());

  // vertices come in exact antipodal pairs (negation commutes bitwise with
  // midpoint subdivision); process one face per antipodal pair and emit the
  // partner as the exact negation so even integrands symmetrize perfectly
  std::map<std::array<double, 3>, int> index;
  for (size_t i = 0; i < verts.size(); ++i)
    index.emplace(std::array<double, 3>{verts[i].x(), verts[i].y(),
                                        verts[i].z()},
                  static_cast<int>(i));
  auto antipode = [&](int i) {
    return index.at({-verts[i].x(), -verts[i].y(), -verts[i].z()});
  };

  Eigen::Index row = 0;
  for (const auto& t : faces) {
    Tri s = t, sa = {antipode(t[0]), antipode(t[1]), antipode(t[2])};
    std::sort(s.begin(), s.end());
    std::sort(sa.begin(), sa.end());
    if (sa < s) continue;  // handled with its antipodal partner

    const V3 &a = verts[t[0]], &b = verts[t[1]], &c = verts[t[2]];
    const double area_s = spherical_area(a, b, c);
    // lift the planar rule by radial projection; exact jacobian d / |p|^3
    V3 n = (b - a).cross(c - a);
    const double area_f = 0.5 * n.norm();
    n.normalize();
    const double d = std::abs(a.dot(n));

    double wsum = 0.0;
    for (int i = 0; i < m; ++i) {
      const auto& bc = rule.b[i];
      V3 p = bc[0] * a + bc[1] * b + bc[2] * c;
      const double r = p.norm();
      q.nodes.row(row + i) = (p / r).transpose();
      double w = rule.w[i] * area_f * d / (r * r * r);
      q.weights(row + i) = w;
      wsum += w;
    }
    // rescale the piece so constants integrate exactly
    q.weights.segment(row, m) *= area_s / wsum;
    q.nodes.middleRows(row + m, m) = -q.nodes.middleRows(row, m);
    q.weights.segment(row + m, m) = q.weights.segment(row, m);
    row += 2 * m;
  }
  // pin the total to the exact sphere area
  long double tot = 0.0L;
  for (Eigen::Index i = 0; i < q.weights.size(); ++i) tot += q.weights(i);
  q.weights *= static_cast<double>(4.0L * kPi / tot);
  return q;
}

SphericalQuadrature monte_carlo(int n, int level, std::uint64_t seed) {
  long pairs = 1000;
  for (int i = 0; i < level; ++i) pairs *= 10;
  SphericalQuadrature q;
  q.dim = n;
  q.level = level;
  q.nodes.resize(2 * pairs, n);
  q.weights = Vec::Constant(2 * pairs, sphere_area(n) / (2.0 * pairs));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec u(n);
  for (long i = 0; i < pairs; ++i) {
    do {
      for (int j = 0; j < n; ++j) u(j) = gauss(rng);
    } while (u.norm() < 1e-12);
    u.normalize();
    q.nodes.row(2 * i) = u.transpose();
    q.nodes.row(2 * i + 1) = -u.transpose();
  }
  return q;
}

}  // namespace

Mat icosphere_vertices(int level) {
  std::vector<V3> verts;
  std::vector<Tri> faces;
  icosahedron(verts, faces);
  for (int i = 0; i < level; ++i) subdivide(verts, faces);
  Mat out(verts.size(), 3);
  for (size_t i = 0; i < verts.size(); ++i) out.row(i) = verts[i].transpose();
  return out;
}

SphericalQuadrature make_quadrature(int n, int level, std::uint64_t seed) {
  if (n < 3)
    throw Error(ErrorCode::InvalidDimension, "sphere quadrature needs n >= 3");
  if (level < 0)
    throw Error(ErrorCode::InvalidParams, "quadrature level must be >= 0");
  if (n == 3) return icosahedral(level);
  return monte_carlo(n, level, seed);
}

double pairwise_dot(const Vec& w, const Vec& f) {
  // fixed-order pairwise reduction; independent of any parallel fan-out
  const Eigen::Index n = w.size();
  std::vector<double> buf(n);
  for (Eigen::Index i = 0; i < n; ++i) buf[i] = w(i) * f(i);
  Eigen::Index m = n;
  while (m > 1) {
    Eigen::Index half = m / 2;
    for (Eigen::Index i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (m % 2) {
      buf[half] = buf[m - 1];
      ++half;
    }
    m = half;
  }
  return n ? buf[0] : 0.0;
}

double sphere_area(int n) { return n * ball_volume(n); }

double ball_volume(int n) {
  return std::pow(kPi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

}  // namespace mvgeo
