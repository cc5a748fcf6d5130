#include "mvgeo/valuation.hpp"

#include <algorithm>
#include <cmath>

namespace mvgeo {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

// merge atoms sharing a direction (exact-construction noise tolerance)
DiscreteSphericalMeasure merged(int dim,
                                std::vector<DiscreteSphericalMeasure::Atom> atoms) {
  std::vector<DiscreteSphericalMeasure::Atom> cl;
  for (auto& a : atoms) {
    bool found = false;
    for (auto& c : cl) {
      if ((c.direction - a.direction).lpNorm<Eigen::Infinity>() <= 1e-10) {
        c.weight += a.weight;
        found = true;
        break;
      }
    }
    if (!found) cl.push_back(std::move(a));
  }
  std::sort(cl.begin(), cl.end(),
            [](const auto& x, const auto& y) {
              return lex_less(x.direction, y.direction);
            });
  DiscreteSphericalMeasure m;
  m.dim = dim;
  m.atoms = std::move(cl);
  for (const auto& a : m.atoms)
    if (a.weight < 0) m.is_signed = true;
  return m;
}

}  // namespace

double DiscreteSphericalMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

std::vector<DiscreteSphericalMeasure::Atom>
DiscreteSphericalMeasure::negative_atoms() const {
  double abs_mass = 0.0;
  for (const auto& a : atoms) abs_mass += std::abs(a.weight);
  const double thresh = -1e-12 * std::max(abs_mass, 1e-300);
  std::vector<Atom> out;
  for (const auto& a : atoms)
    if (a.weight < thresh) out.push_back(a);
  return out;
}

DiscreteSphericalMeasure surface_area_measure(const Polytope& K) {
  DiscreteSphericalMeasure m;
  m.dim = K.ambient_dim();
  if (K.is_empty()) return m;
  std::vector<DiscreteSphericalMeasure::Atom> atoms;
  for (const auto& f : facets(K)) atoms.push_back({f.outer_normal, f.measure});
  return merged(K.ambient_dim(), std::move(atoms));
}

Zonotope projection_body(const Polytope& K) {
  const int n = K.ambient_dim();
  if (K.is_empty()) return Zonotope(n);
  // h(Pi K, u) = (1/2) sum_F area(F) |u . w_F|: generators (area/2) w_F
  std::vector<Vec> gens;
  for (const auto& f : facets(K)) gens.push_back(0.5 * f.measure * f.outer_normal);
  return Zonotope::from_generators(n, std::move(gens));
}

Zonotope projection_body_o(const Polytope& K) {
  if (K.is_empty()) return Zonotope(K.ambient_dim());
  return projection_body(conv_with_origin(K));
}

Zonotope phi(const Polytope& K, const ValuationParams& p) {
  if (p.c1 < 0 || p.c2 < 0)
    throw Error(ErrorCode::InvalidParams,
                "coefficients must lie in the closed cone c1, c2 >= 0");
  if (K.is_empty()) return Zonotope(K.ambient_dim());
  return minkowski_sum(scale(projection_body(K), p.c1),
                       scale(projection_body_o(K), p.c2));
}

double phi_support_direct(const Polytope& K, const ValuationParams& p,
                          const Vec& u) {
  if (p.c1 < 0 || p.c2 < 0)
    throw Error(ErrorCode::InvalidParams,
                "coefficients must lie in the closed cone c1, c2 >= 0");
  if (K.is_empty()) return 0.0;
  double sk = shadow_area(K, u);
  double sk0 = shadow_area(conv_with_origin(K), u);
  return p.a1() * sk + p.a2() * (sk0 - sk);
}

DiscreteSphericalMeasure rho_measure(const Polytope& K, double c1, double c2) {
  if (K.is_empty())
    throw Error(ErrorCode::EmptyBody, "rho measure of empty body");
  std::vector<DiscreteSphericalMeasure::Atom> atoms;
  for (const auto& f : facets(conv_with_origin(K)))
    atoms.push_back({f.outer_normal, 0.5 * c1 * f.measure});
  for (const auto& f : facets(K))
    atoms.push_back({f.outer_normal, -0.5 * c2 * f.measure});
  return merged(K.ambient_dim(), std::move(atoms));
}

}  // namespace mvgeo
