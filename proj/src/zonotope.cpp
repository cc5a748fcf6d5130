#include "mvgeo/zonotope.hpp"

#include <algorithm>
#include <cmath>

namespace mvgeo {

namespace {

Vec sign_normalized(Vec v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  // drop negative zeros left behind by the flip
  for (int i = 0; i < v.size(); ++i)
    if (v(i) == 0.0) v(i) = 0.0;
  return v;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

struct Atom {
  Vec dir;  // sign-normalized unit direction
  double len = 0.0;
};

// cluster parallel atoms: directions within 1e-10 max-norm are merged
std::vector<Atom> merge_atoms(std::vector<Atom> atoms, double dir_tol) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return lex_less(a.dir, b.dir); });
  std::vector<Atom> out;
  for (auto& a : atoms) {
    if (!out.empty() &&
        (a.dir - out.back().dir).lpNorm<Eigen::Infinity>() <= dir_tol) {
      out.back().len += a.len;
    } else {
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace

Zonotope Zonotope::from_generators(int dim, std::vector<Vec> gens) {
  double max_norm = 0.0;
  for (const auto& g : gens) max_norm = std::max(max_norm, g.norm());
  Zonotope z(dim);
  if (max_norm == 0.0) return z;

  std::vector<Atom> atoms;
  atoms.reserve(gens.size());
  const double zero_tol = 1e-14 * max_norm;
  for (auto& g : gens) {
    double len = g.norm();
    if (len <= zero_tol) continue;
    atoms.push_back({sign_normalized(g / len), len});
  }
  atoms = merge_atoms(std::move(atoms), 1e-10);
  z.gens_.reserve(atoms.size());
  for (const auto& a : atoms) z.gens_.push_back(a.len * a.dir);
  std::sort(z.gens_.begin(), z.gens_.end(), lex_less);
  return z;
}

double Zonotope::support(const Vec& u) const {
  double s = 0.0;
  for (const auto& g : gens_) s += std::abs(u.dot(g));
  return s;
}

Vec Zonotope::support_batch(const Mat& dirs) const {
  Vec out = Vec::Zero(dirs.rows());
  if (gens_.empty()) return out;
  // accumulate |dirs . g| generator by generator over cache-resident row
  // blocks; the k=dim inner dimension is too skinny for a GEMM to pay off
  const Eigen::Index block = 4096;
  for (Eigen::Index r0 = 0; r0 < dirs.rows(); r0 += block) {
    const Eigen::Index rows = std::min(block, dirs.rows() - r0);
    auto o = out.segment(r0, rows).array();
    if (dim_ == 3) {
      auto a0 = dirs.col(0).segment(r0, rows).array();
      auto a1 = dirs.col(1).segment(r0, rows).array();
      auto a2 = dirs.col(2).segment(r0, rows).array();
      for (const auto& g : gens_)
        o += (a0 * g(0) + a1 * g(1) + a2 * g(2)).abs();
    } else {
      Eigen::ArrayXd s(rows);
      for (const auto& g : gens_) {
        s = dirs.col(0).segment(r0, rows).array() * g(0);
        for (int k = 1; k < dim_; ++k)
          s += dirs.col(k).segment(r0, rows).array() * g(k);
        o += s.abs();
      }
    }
  }
  return out;
}

double Zonotope::diameter() const {
  double s = 0.0;
  for (const auto& g : gens_) s += g.norm();
  return 2.0 * s;
}

bool Zonotope::full_dimensional() const {
  if (static_cast<int>(gens_.size()) < dim_) return false;
  Mat G(dim_, gens_.size());
  double max_norm = 0.0;
  for (size_t i = 0; i < gens_.size(); ++i) {
    G.col(i) = gens_[i];
    max_norm = std::max(max_norm, gens_[i].norm());
  }
  Eigen::JacobiSVD<Mat> svd(G);
  return svd.singularValues()(dim_ - 1) > 1e-12 * max_norm;
}

Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b) {
  std::vector<Vec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Zonotope::from_generators(a.dim() ? a.dim() : b.dim(),
                                   std::move(gens));
}

Zonotope scale(const Zonotope& z, double c) {
  std::vector<Vec> gens;
  gens.reserve(z.generators().size());
  for (const auto& g : z.generators()) gens.push_back(c * g);
  return Zonotope::from_generators(z.dim(), std::move(gens));
}

Zonotope contravariant_image(const Zonotope& z, const Mat& M) {
  Eigen::FullPivLU<Mat> lu(M);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularMatrix, "contravariant image of singular map");
  double det = std::abs(lu.determinant());
  Mat T = det * lu.inverse().transpose();
  std::vector<Vec> gens;
  gens.reserve(z.generators().size());
  for (const auto& g : z.generators()) gens.push_back(T * g);
  return Zonotope::from_generators(z.dim(), std::move(gens));
}

double zonotope_residual(const Zonotope& a, const Zonotope& b) {
  // net signed generating measure of a minus b, clustered a little coarser
  // than canonicalization to absorb cross-build direction noise
  struct SAtom {
    Vec dir;
    Vec net;
  };
  std::vector<SAtom> cl;
  auto add = [&](const Vec& g, double sign) {
    double len = g.norm();
    if (len == 0.0) return;
    Vec d = g / len;
    if (sign < 0) {
      // directions are sign-normalized already; compare on the direction
    }
    for (auto& c : cl) {
      if ((c.dir - d).lpNorm<Eigen::Infinity>() <= 1e-7) {
        c.net += sign * g;
        return;
      }
    }
    cl.push_back({d, sign * g});
  };
  for (const auto& g : a.generators()) add(g, +1.0);
  for (const auto& g : b.generators()) add(g, -1.0);
  double r = 0.0;
  for (const auto& c : cl) r = std::max(r, c.net.norm());
  return r;
}

bool zonotope_equal(const Zonotope& a, const Zonotope& b, double tol) {
  double scale = std::max(a.diameter(), b.diameter());
  if (scale == 0.0) return true;
  return zonotope_residual(a, b) <= tol * scale;
}

}  // namespace mvgeo
