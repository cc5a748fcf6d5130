#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "mvgeo/polytope.hpp"

using namespace mvgeo;

namespace {

Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

std::vector<Vec> cube_vertices(double lo, double hi) {
  std::vector<Vec> pts;
  for (double x : {lo, hi})
    for (double y : {lo, hi})
      for (double z : {lo, hi}) pts.push_back(v3(x, y, z));
  return pts;
}

Vec rand_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec u(3);
  do {
    u << g(rng), g(rng), g(rng);
  } while (u.norm() < 1e-12);
  return u.normalized();
}

Polytope rand_body(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Vec> pts;
  for (int i = 0; i < m; ++i) pts.push_back(v3(unif(rng), unif(rng), unif(rng)));
  return convex_hull(pts);
}

}  // namespace

TEST_CASE("hull drops interior points and non-extreme input") {
  auto K = convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1),
                        v3(0.25, 0.25, 0.25)});
  CHECK(K.vertices().size() == 4);
  CHECK(K.intrinsic_dim() == 3);
  for (const auto& v : K.vertices())
    CHECK((v - v3(0.25, 0.25, 0.25)).norm() > 0.1);
}

TEST_CASE("hull of two points is a segment") {
  auto K = convex_hull({v3(1, 0, 0), v3(1, 1, 0)});
  CHECK(K.intrinsic_dim() == 1);
  CHECK(K.vertices().size() == 2);
}

TEST_CASE("hull is idempotent on random input") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    auto K = rand_body(rng, 50);
    auto K2 = convex_hull(K.vertices());
    REQUIRE(K.vertices().size() == K2.vertices().size());
    for (size_t i = 0; i < K.vertices().size(); ++i)
      CHECK((K.vertices()[i] - K2.vertices()[i]).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("support of the cube") {
  auto K = convex_hull(cube_vertices(-1, 1));
  CHECK(support(K, v3(1, 2, 3)) == doctest::Approx(6.0));
  CHECK(support(K, v3(0, 0, 0)) == doctest::Approx(0.0));
}

TEST_CASE("support transformation law h(MK,x) = h(K,M^T x)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto K = rand_body(rng, 12);
  Mat M(3, 3);
  for (int i = 0; i < 9; ++i) M(i / 3, i % 3) = unif(rng);
  auto MK = linear_image(K, M);
  for (int i = 0; i < 100; ++i) {
    Vec x = rand_unit(rng);
    CHECK(support(MK, x) == doctest::Approx(support(K, M.transpose() * x)));
  }
}

TEST_CASE("volumes") {
  CHECK(volume(convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0),
                            v3(0, 0, 1)})) == doctest::Approx(1.0 / 6));
  CHECK(volume(convex_hull(cube_vertices(-1, 1))) == doctest::Approx(8.0));
  CHECK(volume(convex_hull({v3(0, 0, 0), v3(1, 1, 0)})) == 0.0);
}

TEST_CASE("facets of the unit cube") {
  auto fs = facets(convex_hull(cube_vertices(0, 1)));
  REQUIRE(fs.size() == 6);
  Vec sum = Vec::Zero(3);
  for (const auto& f : fs) {
    CHECK(f.measure == doctest::Approx(1.0));
    CHECK(f.outer_normal.norm() == doctest::Approx(1.0));
    CHECK(f.outer_normal.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
    sum += f.measure * f.outer_normal;
  }
  CHECK(sum.norm() == doctest::Approx(0.0));  // closed boundary
}

TEST_CASE("flat triangle gets the two-sided facet convention") {
  auto S = convex_hull({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
  REQUIRE(S.intrinsic_dim() == 2);
  auto fs = facets(S);
  REQUIRE(fs.size() == 2);
  const double a = std::sqrt(3.0) / 2;
  Vec w = v3(1, 1, 1).normalized();
  CHECK(fs[0].measure == doctest::Approx(a));
  CHECK(fs[1].measure == doctest::Approx(a));
  CHECK(std::abs(fs[0].outer_normal.dot(w)) == doctest::Approx(1.0));
  CHECK((fs[0].outer_normal + fs[1].outer_normal).norm() ==
        doctest::Approx(0.0));
}

TEST_CASE("facets of the corner simplex") {
  auto K = convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
  auto fs = facets(K);
  REQUIRE(fs.size() == 4);
  Vec w = v3(1, 1, 1).normalized();
  int axis_facets = 0, diag_facets = 0;
  for (const auto& f : fs) {
    if (f.outer_normal.dot(w) > 0.9) {
      CHECK(f.measure == doctest::Approx(std::sqrt(3.0) / 2));
      ++diag_facets;
    } else {
      CHECK(f.measure == doctest::Approx(0.5));
      CHECK(f.outer_normal.minCoeff() == doctest::Approx(-1.0));
      ++axis_facets;
    }
  }
  CHECK(axis_facets == 3);
  CHECK(diag_facets == 1);
}

TEST_CASE("projections and shadow areas") {
  auto C = convex_hull(cube_vertices(-1, 1));
  auto sq = project(C, v3(0, 0, 1));
  CHECK(sq.intrinsic_dim() == 2);
  CHECK(relative_volume(sq) == doctest::Approx(4.0));
  CHECK(shadow_area(C, v3(0, 0, 1)) == doctest::Approx(4.0));
  CHECK(shadow_area(C, v3(1, 1, 1).normalized()) ==
        doctest::Approx(4 * std::sqrt(3.0)));

  auto seg = convex_hull({v3(0, 0, -1), v3(0, 0, 1)});
  auto p = project(seg, v3(0, 0, 1));
  CHECK(p.intrinsic_dim() == 0);

  auto T = convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
  CHECK(shadow_area(T, v3(0, 0, 1)) == doctest::Approx(0.5));
}

TEST_CASE("projection matches the cosine transform of the facet data") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    auto K = rand_body(rng, 4 + rep * 2);
    if (!K.is_full_dimensional()) continue;
    auto fs = facets(K);
    for (int i = 0; i < 100; ++i) {
      Vec u = rand_unit(rng);
      double cosine = 0.0;
      for (const auto& f : fs)
        cosine += 0.5 * f.measure * std::abs(u.dot(f.outer_normal));
      double shadow = shadow_area(K, u);
      CHECK(std::abs(cosine - shadow) <= 1e-9 * shadow);
    }
  }
}

TEST_CASE("halfspace cuts") {
  auto C = convex_hull(cube_vertices(-1, 1));
  Hyperplane H{v3(1, 0, 0), 0.0};
  auto lo = intersect_halfspace(C, H, Side::Negative);
  auto hi = intersect_halfspace(C, H, Side::Positive);
  auto on = intersect_halfspace(C, H, Side::On);
  CHECK(volume(lo) == doctest::Approx(4.0));
  CHECK(volume(hi) == doctest::Approx(4.0));
  CHECK(on.intrinsic_dim() == 2);
  CHECK(relative_volume(on) == doctest::Approx(4.0));

  // plane missing the body entirely
  Hyperplane far{v3(1, 0, 0), 5.0};
  CHECK(intersect_halfspace(C, far, Side::Positive).is_empty());
  CHECK(volume(intersect_halfspace(C, far, Side::Negative)) ==
        doctest::Approx(8.0));
}

TEST_CASE("cut additivity on random bodies") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unif(-0.3, 0.3);
  for (int rep = 0; rep < 25; ++rep) {
    auto K = rand_body(rng, 10);
    if (!K.is_full_dimensional()) continue;
    Hyperplane H{rand_unit(rng), unif(rng)};
    double vp = volume(intersect_halfspace(K, H, Side::Positive));
    double vm = volume(intersect_halfspace(K, H, Side::Negative));
    CHECK(vp + vm == doctest::Approx(volume(K)).epsilon(1e-9));
  }
}

TEST_CASE("linear images") {
  auto C = convex_hull(cube_vertices(-1, 1));
  CHECK(volume(linear_image(C, 2 * Mat::Identity(3, 3))) ==
        doctest::Approx(64.0));
  Mat sing = Mat::Identity(3, 3);
  sing(2, 2) = 0.0;
  CHECK(linear_image(C, sing).intrinsic_dim() == 2);
}

TEST_CASE("conv with origin") {
  auto C = convex_hull(cube_vertices(-1, 1));
  CHECK(conv_with_origin(C).vertices().size() == C.vertices().size());

  auto S = convex_hull({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
  auto S0 = conv_with_origin(S);
  CHECK(S0.intrinsic_dim() == 3);
  CHECK(S0.vertices().size() == 4);

  auto seg = convex_hull({v3(1, 0, 0), v3(1, 1, 0)});
  auto tri = conv_with_origin(seg);
  CHECK(tri.intrinsic_dim() == 2);
  CHECK(relative_volume(tri) == doctest::Approx(0.5));
}

TEST_CASE("membership and affine-hull distance") {
  auto C = convex_hull(cube_vertices(-1, 1));
  CHECK(contains_origin(C));
  CHECK(contains_point(C, v3(1, 1, 1)));
  CHECK(!contains_point(C, v3(1.01, 0, 0)));

  auto seg = convex_hull({v3(1, 0, 0), v3(1, 1, 0)});
  CHECK(distance_to_affine_hull(seg, v3(0, 0, 0)) == doctest::Approx(1.0));
  CHECK(distance_to_affine_hull(seg, v3(1, 5, 0)) == doctest::Approx(0.0));
}

TEST_CASE("empty body and error paths") {
  auto E = Polytope::empty(3);
  CHECK(E.is_empty());
  CHECK(volume(E) == 0.0);
  CHECK_THROWS_AS(support(E, v3(1, 0, 0)), Error);
  CHECK_THROWS_AS(convex_hull(std::vector<Vec>{}), Error);
  auto seg = convex_hull({v3(1, 0, 0), v3(1, 1, 0)});
  CHECK_THROWS_AS(affine_hull_normal(seg), Error);  // not (n-1)-dimensional
}

TEST_CASE("four-dimensional cross-polytope facets") {
  std::vector<Vec> pts;
  for (int i = 0; i < 4; ++i)
    for (double s : {-1.0, 1.0}) {
      Vec v = Vec::Zero(4);
      v(i) = s;
      pts.push_back(v);
    }
  auto K = convex_hull(pts);
  CHECK(K.intrinsic_dim() == 4);
  CHECK(volume(K) == doctest::Approx(16.0 / 24));  // 2^n / n!
  auto fs = facets(K);
  CHECK(fs.size() == 16);
  Vec closed = Vec::Zero(4);
  for (const auto& f : fs) closed += f.measure * f.outer_normal;
  CHECK(closed.norm() == doctest::Approx(0.0));
}
