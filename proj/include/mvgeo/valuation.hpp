#pragma once

#include <vector>

#include "mvgeo/polytope.hpp"
#include "mvgeo/zonotope.hpp"

namespace mvgeo {

/// Atomic measure on the unit sphere; weights may be signed.
struct DiscreteSphericalMeasure {
  struct Atom {
    Vec direction;  // unit vector
    double weight = 0.0;
  };
  int dim = 0;
  std::vector<Atom> atoms;  // directions pairwise distinct, sorted lex
  bool is_signed = false;

  double total_mass() const;
  /// Atoms with weight < -1e-12 * (total absolute mass).
  std::vector<Atom> negative_atoms() const;
};

/// Coefficients (c1, c2) of the valuation c1 Pi + c2 Pi_o; the admissible
/// set is the closed cone c1, c2 >= 0.
struct ValuationParams {
  double c1 = 1.0;
  double c2 = 0.0;
  double a1() const { return c1 + c2; }
  double a2() const { return c2; }
};

DiscreteSphericalMeasure surface_area_measure(const Polytope& K);

Zonotope projection_body(const Polytope& K);
Zonotope projection_body_o(const Polytope& K);

/// c1 Pi K + c2 Pi_o K. Throws InvalidParams outside the cone.
/// The empty body maps to {0}.
Zonotope phi(const Polytope& K, const ValuationParams& p);

/// Direct support evaluation of phi K through shadow areas,
/// a1 vol(K|u^perp) + a2 (vol(K_o|u^perp) - vol(K|u^perp)); an
/// independent route used to cross-check the generator path.
double phi_support_direct(const Polytope& K, const ValuationParams& p,
                          const Vec& u);

/// Signed measure (c1/2) S(K_o, .) - (c2/2) S(K, .), atoms merged by
/// direction.
DiscreteSphericalMeasure rho_measure(const Polytope& K, double c1, double c2);

}  // namespace mvgeo
