#include "mvgeo/polar.hpp"

#include <cmath>

namespace mvgeo {

namespace {

// batch evaluation with a scalar fallback
Vec run_batch(const std::function<Vec(const Mat&)>& batch,
              const std::function<double(const Vec&)>& eval, const Mat& dirs) {
  if (batch) return batch(dirs);
  Vec out(dirs.rows());
  for (Eigen::Index i = 0; i < dirs.rows(); ++i)
    out(i) = eval(dirs.row(i).transpose());
  return out;
}

}  // namespace

SupportOracle support_oracle(const Zonotope& z) {
  SupportOracle h;
  h.dim = z.dim();
  h.positive = z.full_dimensional();
  h.eval = [z](const Vec& u) { return z.support(u); };
  h.eval_batch = [z](const Mat& dirs) { return z.support_batch(dirs); };
  return h;
}

SupportOracle support_oracle(const Polytope& K) {
  if (K.is_empty())
    throw Error(ErrorCode::EmptyBody, "support oracle of empty body");
  SupportOracle h;
  h.dim = K.ambient_dim();
  bool pos = K.intrinsic_dim() == K.ambient_dim();
  if (pos) {
    // 0 interior iff every facet plane has strictly positive offset
    const double tol = 1e-12 * std::max(K.diameter(), 1.0);
    for (const auto& f : facets(K))
      if (support(K, f.outer_normal) <= tol) {
        pos = false;
        break;
      }
  }
  h.positive = pos;
  Mat V(K.ambient_dim(), K.vertices().size());
  for (size_t i = 0; i < K.vertices().size(); ++i) V.col(i) = K.vertices()[i];
  h.eval = [V](const Vec& u) { return (V.transpose() * u).maxCoeff(); };
  h.eval_batch = [V](const Mat& dirs) -> Vec {
    return (dirs * V).rowwise().maxCoeff();
  };
  return h;
}

SupportOracle ellipsoid_support_oracle(const Mat& A) {
  SupportOracle h;
  h.dim = static_cast<int>(A.rows());
  Eigen::JacobiSVD<Mat> svd(A);
  h.positive = svd.singularValues()(A.rows() - 1) > 0;
  h.eval = [A](const Vec& u) { return (A.transpose() * u).norm(); };
  h.eval_batch = [A](const Mat& dirs) -> Vec {
    return (dirs * A).rowwise().norm();
  };
  return h;
}

RadialOracle polar_radial(const SupportOracle& h) {
  if (!h.positive)
    throw Error(ErrorCode::OriginNotInterior,
                "polar radial function needs 0 interior");
  RadialOracle rho;
  rho.dim = h.dim;
  auto eval = h.eval;
  auto batch = h.eval_batch;
  rho.eval = [eval](const Vec& u) { return 1.0 / eval(u); };
  rho.eval_batch = [eval, batch](const Mat& dirs) -> Vec {
    return run_batch(batch, eval, dirs).cwiseInverse();
  };
  return rho;
}

double star_volume(const RadialOracle& rho, const SphericalQuadrature& q) {
  Vec r = run_batch(rho.eval_batch, rho.eval, q.nodes);
  Vec rn = r.array().pow(q.dim).matrix();
  return pairwise_dot(q.weights, rn) / q.dim;
}

double polar_volume(const SupportOracle& h, const SphericalQuadrature& q) {
  return star_volume(polar_radial(h), q);
}

double polar_volume(const Zonotope& z, const SphericalQuadrature& q) {
  return polar_volume(support_oracle(z), q);
}

RadialOracle harmonic_combination(double alpha, const RadialOracle& K,
                                  double beta, const RadialOracle& L) {
  if (alpha < 0 || beta < 0 || alpha + beta <= 0)
    throw Error(ErrorCode::InvalidParams,
                "harmonic combination needs alpha, beta >= 0, alpha + beta > 0");
  RadialOracle out;
  out.dim = K.dim;
  auto ek = K.eval, el = L.eval;
  auto bk = K.eval_batch, bl = L.eval_batch;
  out.eval = [alpha, beta, ek, el](const Vec& u) {
    double rk = ek(u), rl = el(u);
    if (rk <= 0.0 || rl <= 0.0)
      throw Error(ErrorCode::DegenerateRadial,
                  "zero radial value in harmonic combination");
    return 1.0 / (alpha / rk + beta / rl);
  };
  out.eval_batch = [alpha, beta, ek, el, bk, bl](const Mat& dirs) -> Vec {
    Vec rk = run_batch(bk, ek, dirs);
    Vec rl = run_batch(bl, el, dirs);
    if (rk.minCoeff() <= 0.0 || rl.minCoeff() <= 0.0)
      throw Error(ErrorCode::DegenerateRadial,
                  "zero radial value in harmonic combination");
    return (alpha * rk.cwiseInverse() + beta * rl.cwiseInverse())
        .cwiseInverse();
  };
  return out;
}

double dual_bm_gap(const RadialOracle& K, const RadialOracle& L,
                   const SphericalQuadrature& q) {
  const double n = q.dim;
  double vh = star_volume(harmonic_combination(1.0, K, 1.0, L), q);
  double vk = star_volume(K, q);
  double vl = star_volume(L, q);
  return std::pow(vh, -1.0 / n) - std::pow(vk, -1.0 / n) -
         std::pow(vl, -1.0 / n);
}

}  // namespace mvgeo
