#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mvgeo/io.hpp"
#include "mvgeo/verify.hpp"

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

bool same_body(const Polytope& a, const Polytope& b, double tol = 1e-9) {
  if (a.vertices().size() != b.vertices().size()) return false;
  for (size_t i = 0; i < a.vertices().size(); ++i)
    if ((a.vertices()[i] - b.vertices()[i]).norm() > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("the hyperplane cut reproduces the two simplex maps") {
  Polytope S = standard_simplex(3);
  for (double lambda : {0.25, 1.0 / 3, 0.5, 0.8}) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        auto c = make_dissection(S, prop6_plane(lambda, i, j), "prop6");
        auto phiS = linear_image(S, prop6_phi_map(lambda, i, j));
        auto psiS = linear_image(S, prop6_psi_map(lambda, i, j));
        bool direct = same_body(c.k_plus, phiS) && same_body(c.k_minus, psiS);
        bool swapped = same_body(c.k_plus, psiS) && same_body(c.k_minus, phiS);
        CHECK((direct || swapped));
        // the pieces are flat triangles sharing a segment
        CHECK(c.k_zero.intrinsic_dim() == 1);
      }
  }
}

TEST_CASE("valuation identity on the cut cube") {
  auto C = convex_hull(cube_vertices(-1, 1));
  auto c = make_dissection(C, Hyperplane{v3(1, 0, 0), 0.0}, "cube-cut");
  auto r = check_valuation_identity(c, {1, 1});
  CHECK(r.pass);
  CHECK(r.residual < 1e-12);
}

TEST_CASE("valuation identity with a plane missing the body") {
  auto C = convex_hull(cube_vertices(-1, 1));
  auto c = make_dissection(C, Hyperplane{v3(1, 0, 0), 9.0}, "miss");
  CHECK(c.k_plus.is_empty());
  CHECK(c.k_zero.is_empty());
  CHECK(volume(c.k_minus) == doctest::Approx(8.0));
  auto r = check_valuation_identity(c, {2, 3});
  CHECK(r.pass);  // pass-through identity with an empty piece
}

TEST_CASE("valuation identity on the simplex dissection") {
  Polytope S = standard_simplex(3);
  auto c = make_dissection(S, prop6_plane(1.0 / 3, 0, 1), "prop6");
  auto r = check_valuation_identity(c, {0, 1});
  CHECK(r.pass);
}

TEST_CASE("contravariance checks") {
  auto C = convex_hull(cube_vertices(-1, 1));
  CHECK(check_contravariance(C, Mat::Identity(3, 3), {1, 1}).residual ==
        doctest::Approx(0.0));

  // rotations commute with phi
  double a = 0.7;
  Mat R(3, 3);
  R << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  auto r = check_contravariance(standard_simplex(3), R, {2, 3}, 1e-10);
  CHECK(r.pass);

  for (int i = 0; i < 10; ++i) {
    Mat M = random_matrix_det_pos(1000 + i, 3);
    CHECK(M.determinant() > 0);
    auto rep = check_contravariance(random_polytope(2000 + i), M, {1, 1});
    CHECK(rep.pass);
  }
}

TEST_CASE("degeneracy strata") {
  // point
  CHECK(check_lemma5(convex_hull({v3(1, 0, 0)}), {1, 1}).pass);
  // segment through the origin line
  CHECK(check_lemma5(convex_hull({v3(-1, 0, 0), v3(1, 0, 0)}), {1, 1}).pass);
  // off-line segment: the segment law with its exact half-length
  auto r = check_lemma5(convex_hull({v3(1, 0, 0), v3(1, 1, 0)}), {3, 2});
  CHECK(r.pass);
  // and the value itself is [-e3, e3]
  auto z = phi(convex_hull({v3(1, 0, 0), v3(1, 1, 0)}), {3, 2});
  REQUIRE(z.generators().size() == 1);
  CHECK((z.generators()[0] - v3(0, 0, 1)).norm() == doctest::Approx(0.0));
  // flat body in a plane through 0
  CHECK(check_lemma5(convex_hull({v3(1, 0, 0), v3(0, 1, 0), v3(-1, -1, 0),
                                  v3(1, 1, 0)}),
                     {1, 1})
            .pass);
  // full-dimensional input is out of scope for the strata laws
  CHECK_THROWS_AS(check_lemma5(convex_hull(cube_vertices(-1, 1)), {1, 1}),
                  Error);
}

TEST_CASE("rho obstruction check") {
  auto r = check_rho_obstruction(1.0, 1.0);
  CHECK(r.pass);
  CHECK(r.residual < 1e-12);
  CHECK(check_rho_obstruction(5.0, 1.0).pass);
  CHECK(check_rho_obstruction(2.0, 0.0).pass);  // unsigned, not applicable
}

TEST_CASE("inequality chain on cubes") {
  auto q = make_quadrature(3, 4, 1);

  auto C = convex_hull(cube_vertices(-1, 1));
  for (double lambda : {0.0, 0.5, 1.0}) {
    auto r = check_theorem8_chain(C, lambda, q);
    CHECK(r.pass);
    CHECK(!r.inconclusive);  // origin inside: certified equality case
  }

  auto T = convex_hull(cube_vertices(1, 2));
  auto r = check_theorem8_chain(T, 0.5, q);
  CHECK(r.pass);
  CHECK(!r.inconclusive);  // far from the origin: certified strict

  CHECK_THROWS_AS(
      check_theorem8_chain(standard_simplex(3), 0.5, q), Error);
}

TEST_CASE("suite is deterministic and passes on reduced counts") {
  SuiteConfig cfg;
  cfg.seed = 42;
  cfg.quad_level = 3;
  cfg.tol_quad = 1e-4;  // matched to the coarser grid
  cfg.dissection_cases = 40;
  cfg.contravariance_cases = 20;
  cfg.lemma5_per_stratum = 10;
  cfg.rho_cases = 5;
  cfg.chain_bodies = 6;
  cfg.dual_bm_pairs = 6;
  cfg.dilate_pairs = 4;

  auto reports = run_suite(cfg);
  CHECK(all_passed(reports));
  auto reports2 = run_suite(cfg);
  CHECK(reports_to_jsonl(reports) == reports_to_jsonl(reports2));

  // a different seed still passes but explores different cases
  cfg.seed = 7;
  CHECK(all_passed(run_suite(cfg)));
}

TEST_CASE("suite flags violations when the tolerance is unreachable") {
  SuiteConfig cfg;
  cfg.seed = 42;
  cfg.quad_level = 2;
  cfg.dissection_cases = 5;
  cfg.contravariance_cases = 5;
  cfg.lemma5_per_stratum = 2;
  cfg.rho_cases = 2;
  cfg.chain_bodies = 4;
  cfg.dual_bm_pairs = 2;
  cfg.dilate_pairs = 2;
  cfg.tol_quad = 1e-15;  // below what any quadrature can certify
  auto reports = run_suite(cfg);
  bool quad_failure = false;
  for (const auto& r : reports)
    if (r.name == "quadrature_anchor" && !r.pass) quad_failure = true;
  CHECK(quad_failure);
}
