// Conformal compactification: the cone model in R^4, the embedding of a
// curvature-pair space into the compact quadric, and its stereographic form.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "ckgeom/conformal.hpp"
#include "ckgeom/errors.hpp"
#include "ckgeom/space.hpp"
#include "ckgeom/trig.hpp"

namespace ckgeom {

// ---------------------------------------------------------------------------
// 1D model on (s+, s-, s1).  Only P1, G1, D act there.

inline Eigen::Matrix3d conf_generator_matrix_1d(double k1, double ell,
                                                ConfGen g) {
  const double p = 1.0 + k1 * ell * ell;
  const double m = 1.0 - k1 * ell * ell;
  Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
  switch (g) {
    case ConfGen::P1:
      M(0, 2) = -p;
      M(1, 2) = -m;
      M(2, 0) = p;
      M(2, 1) = -m;
      M /= 2.0 * ell;
      return M;
    case ConfGen::G1:
      M(0, 2) = ell;
      M(1, 2) = -ell;
      M(2, 0) = -ell;
      M(2, 1) = -ell;
      return M;
    case ConfGen::D:
      M(0, 1) = 1.0;
      M(1, 0) = 1.0;
      return M;
    default:
      throw DomainError("generator has no 1d conformal representation");
  }
}

inline Eigen::Matrix3d conf_subgroup_1d(double k1, double ell, ConfGen g,
                                        double par) {
  const double l2 = ell * ell;
  const double p = 1.0 + k1 * l2;
  const double m = 1.0 - k1 * l2;
  Eigen::Matrix3d M = Eigen::Matrix3d::Identity();
  switch (g) {
    case ConfGen::P1: {
      const double V = vk(k1, par), S = sk(k1, par), C = ck(k1, par);
      M(0, 0) = 1.0 - p * p * V / (4.0 * l2);
      M(0, 1) = p * m * V / (4.0 * l2);
      M(0, 2) = -p * S / (2.0 * ell);
      M(1, 0) = -p * m * V / (4.0 * l2);
      M(1, 1) = 1.0 + m * m * V / (4.0 * l2);
      M(1, 2) = -m * S / (2.0 * ell);
      M(2, 0) = p * S / (2.0 * ell);
      M(2, 1) = -m * S / (2.0 * ell);
      M(2, 2) = C;
      return M;
    }
    case ConfGen::G1: {
      const double q = 0.5 * par * par * l2;
      M(0, 0) = 1.0 - q;
      M(0, 1) = -q;
      M(0, 2) = par * ell;
      M(1, 0) = q;
      M(1, 1) = 1.0 + q;
      M(1, 2) = -par * ell;
      M(2, 0) = -par * ell;
      M(2, 1) = -par * ell;
      return M;
    }
    case ConfGen::D:
      M(0, 0) = M(1, 1) = std::cosh(par);
      M(0, 1) = M(1, 0) = std::sinh(par);
      return M;
    default:
      throw DomainError("generator has no 1d conformal representation");
  }
}

// Section coordinates of the image of the point with coordinate a on the
// 1d space of curvature k1.
inline Eigen::Vector2d embed_1d(double k1, double ell, double a) {
  double T;
  try {
    T = tk(k1, a / 2.0);
  } catch (const PoleError&) {
    throw PoleProjectionError("point maps to the projection pole");
  }
  const double den = ell * ell + T * T;
  return {(ell * ell - T * T) / den, 2.0 * ell * T / den};
}

// ---------------------------------------------------------------------------
// 2D model on (s+, s-, s1, s2).

using ConePoint = Eigen::Vector4d;

inline Eigen::Matrix4d upsilon(const KappaPair& kp) {
  return Eigen::Vector4d(1.0, -1.0, 1.0, kp.k2).asDiagonal();
}

inline double cone_residual(const KappaPair& kp, const ConePoint& s) {
  return s(0) * s(0) - s(1) * s(1) + s(2) * s(2) + kp.k2 * s(3) * s(3);
}

inline Eigen::Matrix4d conf_generator_matrix(const KappaPair& kp, double ell,
                                             ConfGen g) {
  const double l2 = ell * ell;
  const double p = 1.0 + kp.k1 * l2;
  const double m = 1.0 - kp.k1 * l2;
  Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
  switch (g) {
    case ConfGen::P1:
      M(0, 2) = -p;
      M(1, 2) = -m;
      M(2, 0) = p;
      M(2, 1) = -m;
      return M / (2.0 * ell);
    case ConfGen::P2:
      M(0, 3) = -kp.k2 * p;
      M(1, 3) = -kp.k2 * m;
      M(3, 0) = p;
      M(3, 1) = -m;
      return M / (2.0 * ell);
    case ConfGen::J12:
      M(2, 3) = -kp.k2;
      M(3, 2) = 1.0;
      return M;
    case ConfGen::D:
      M(0, 1) = 1.0;
      M(1, 0) = 1.0;
      return M;
    case ConfGen::G1:
      M(0, 2) = ell;
      M(1, 2) = -ell;
      M(2, 0) = -ell;
      M(2, 1) = -ell;
      return M;
    case ConfGen::G2:
      M(0, 3) = kp.k2 * ell;
      M(1, 3) = -kp.k2 * ell;
      M(3, 0) = -ell;
      M(3, 1) = -ell;
      return M;
    case ConfGen::L1:
      return conf_generator_matrix(kp, ell, ConfGen::P1) +
             kp.k1 * conf_generator_matrix(kp, ell, ConfGen::G1);
    case ConfGen::L2:
      return conf_generator_matrix(kp, ell, ConfGen::P2) +
             kp.k1 * conf_generator_matrix(kp, ell, ConfGen::G2);
    case ConfGen::R1:
      return conf_generator_matrix(kp, ell, ConfGen::P1) +
             0.5 * kp.k1 * conf_generator_matrix(kp, ell, ConfGen::G1);
    case ConfGen::R2:
      return conf_generator_matrix(kp, ell, ConfGen::P2) +
             0.5 * kp.k1 * conf_generator_matrix(kp, ell, ConfGen::G2);
  }
  throw DomainError("unknown conformal generator");
}

inline Eigen::Matrix4d conf_subgroup(const KappaPair& kp, double ell, ConfGen g,
                                     double par) {
  const double l2 = ell * ell;
  const double p = 1.0 + kp.k1 * l2;
  const double m = 1.0 - kp.k1 * l2;
  Eigen::Matrix4d M = Eigen::Matrix4d::Identity();
  switch (g) {
    case ConfGen::P1: {
      const double V = vk(kp.k1, par), S = sk(kp.k1, par), C = ck(kp.k1, par);
      M(0, 0) = 1.0 - p * p * V / (4.0 * l2);
      M(0, 1) = p * m * V / (4.0 * l2);
      M(0, 2) = -p * S / (2.0 * ell);
      M(1, 0) = -p * m * V / (4.0 * l2);
      M(1, 1) = 1.0 + m * m * V / (4.0 * l2);
      M(1, 2) = -m * S / (2.0 * ell);
      M(2, 0) = p * S / (2.0 * ell);
      M(2, 1) = -m * S / (2.0 * ell);
      M(2, 2) = C;
      return M;
    }
    case ConfGen::P2: {
      const double k12 = kp.k12();
      const double V = vk(k12, par), S = sk(k12, par), C = ck(k12, par);
      M(0, 0) = 1.0 - kp.k2 * p * p * V / (4.0 * l2);
      M(0, 1) = kp.k2 * p * m * V / (4.0 * l2);
      M(0, 3) = -kp.k2 * p * S / (2.0 * ell);
      M(1, 0) = -kp.k2 * p * m * V / (4.0 * l2);
      M(1, 1) = 1.0 + kp.k2 * m * m * V / (4.0 * l2);
      M(1, 3) = -kp.k2 * m * S / (2.0 * ell);
      M(3, 0) = p * S / (2.0 * ell);
      M(3, 1) = -m * S / (2.0 * ell);
      M(3, 3) = C;
      return M;
    }
    case ConfGen::J12: {
      M(2, 2) = ck(kp.k2, par);
      M(2, 3) = -kp.k2 * sk(kp.k2, par);
      M(3, 2) = sk(kp.k2, par);
      M(3, 3) = ck(kp.k2, par);
      return M;
    }
    case ConfGen::D:
      M(0, 0) = M(1, 1) = std::cosh(par);
      M(0, 1) = M(1, 0) = std::sinh(par);
      return M;
    case ConfGen::G1: {
      const double q = 0.5 * par * par * l2;
      M(0, 0) = 1.0 - q;
      M(0, 1) = -q;
      M(0, 2) = par * ell;
      M(1, 0) = q;
      M(1, 1) = 1.0 + q;
      M(1, 2) = -par * ell;
      M(2, 0) = -par * ell;
      M(2, 1) = -par * ell;
      return M;
    }
    case ConfGen::G2: {
      const double q = 0.5 * kp.k2 * par * par * l2;
      M(0, 0) = 1.0 - q;
      M(0, 1) = -q;
      M(0, 3) = kp.k2 * par * ell;
      M(1, 0) = q;
      M(1, 1) = 1.0 + q;
      M(1, 3) = -kp.k2 * par * ell;
      M(3, 0) = -par * ell;
      M(3, 1) = -par * ell;
      return M;
    }
    default:
      throw DomainError("one-parameter subgroup has no closed form here");
  }
}

// Image of a point on the null cone.  The two first entries are written
// through the versine defect so that the k1 -> 0 limit is exact.
inline ConePoint embed_cone(const KappaPair& kp, double ell,
                            const ChartPoint& p) {
  const WeierstrassPoint w = to_weierstrass(kp, p);
  const double Q = versine_defect(kp, p);  // (1 - x0)/k1, finite at k1 = 0
  const double l2 = ell * ell;
  ConePoint s;
  s(0) = 1.0 - (1.0 + kp.k1 * l2) / (2.0 * l2) * Q;
  s(1) = -1.0 - (1.0 - kp.k1 * l2) / (2.0 * l2) * Q;
  s(2) = w(1) / ell;
  s(3) = w(2) / ell;
  return s;
}

inline bool at_infinity(const ConePoint& s) {
  return std::abs(s(1)) < 1e-12 * s.cwiseAbs().maxCoeff();
}

// Section coordinates (s+, s1, s2) with s- scaled to -1.
inline Eigen::Vector3d to_section(const ConePoint& s) {
  if (at_infinity(s))
    throw PoleProjectionError("ray lies in the plane s- = 0");
  return {-s(0) / s(1), -s(2) / s(1), -s(3) / s(1)};
}

// Stereographic form of the embedding, straight from Weierstrass
// coordinates.  Pole of the projection is x0 = -1.
inline Eigen::Vector3d stereographic(const KappaPair& kp, double ell,
                                     const WeierstrassPoint& w) {
  if (std::abs(1.0 + w(0)) < 1e-13)
    throw PoleProjectionError("point maps to the projection pole");
  const double t1 = w(1) / (1.0 + w(0));
  const double t2 = w(2) / (1.0 + w(0));
  const double u = t1 * t1 + kp.k2 * t2 * t2;
  const double den = ell * ell + u;
  // for k2 < 0 the quantity u can reach -ell^2: the image is then a point
  // at infinity of the section, carried by a ray with s- = 0
  if (std::abs(den) < 1e-13 * (ell * ell + std::abs(u)))
    throw PoleProjectionError("image ray lies in the plane s- = 0");
  return {(ell * ell - u) / den, 2.0 * ell * t1 / den, 2.0 * ell * t2 / den};
}

inline WeierstrassPoint stereographic_inverse(const KappaPair& kp, double ell,
                                              const Eigen::Vector3d& st) {
  const double l2 = ell * ell;
  const double den = (1.0 + st(0)) + kp.k1 * l2 * (1.0 - st(0));
  if (std::abs(den) < 1e-13)
    throw PoleProjectionError("section point is at the image of infinity");
  WeierstrassPoint w;
  w(0) = ((1.0 + st(0)) - kp.k1 * l2 * (1.0 - st(0))) / den;
  w(1) = 2.0 * ell * st(1) / den;
  w(2) = 2.0 * ell * st(2) / den;
  return w;
}

// Chart coordinates on the compact space: the section quadric is the
// Weierstrass sphere of the pair (1, k2).
inline ChartPoint compact_chart(const KappaPair& kp, Chart chart,
                                const Eigen::Vector3d& st) {
  return from_weierstrass(KappaPair(1.0, kp.k2), st, chart);
}

// ---------------------------------------------------------------------------
// Coverage census over a deterministic sample of the whole space.

struct CensusResult {
  long attempted = 0;
  long embedded = 0;
  long pole_hits = 0;      // samples landing on the projection pole
  double min_splus = 2.0;  // smallest section s+ reached
  double max_splus = -2.0;
  double min_pole_gap = 4.0;    // distance of images to the pole (-1, 0, 0)
  double min_slice_gap = 4.0;   // distance of s+ values to the slice s+ = -1
};

// For a flat base (k1 = 0) with k2 < 0 the section points never reached by
// the embedding form the slice s+ = -1, which on the quadric degenerates to
// the two lines s2 = +- c s1 through the projection pole.  Returns the worst
// residual certifying this over n points per line: the line lies on the
// quadric, its points pull back to infinity (vanishing denominator), and
// nearby off-slice points pull back to arbitrarily distant base points.
inline double infinity_locus_check(const KappaPair& kp, double ell, int n) {
  if (kp.k1 != 0.0 || kp.k2 >= 0.0)
    throw DomainError("infinity locus check needs k1 = 0 and k2 < 0");
  const double c = 1.0 / std::sqrt(-kp.k2);
  double worst = 0.0;
  for (int sgn : {-1, 1})
    for (int i = 0; i < n; ++i) {
      const double t = -3.0 + 6.0 * (i + 0.5) / n;
      const Eigen::Vector3d st(-1.0, t, sgn * c * t);
      const double quad =
          st(0) * st(0) + st(1) * st(1) + kp.k2 * st(2) * st(2) - 1.0;
      worst = std::max(worst, std::abs(quad));
      // denominator of the inverse projection vanishes on the slice
      worst = std::max(worst, std::abs((1.0 + st(0)) +
                                       kp.k1 * ell * ell * (1.0 - st(0))));
      // just off the slice the pulled-back point runs away
      const double eps = 1e-6;
      const Eigen::Vector3d near(-1.0 + eps, t, sgn * c * t);
      const WeierstrassPoint w = stereographic_inverse(kp, ell, near);
      if (w.tail<2>().norm() < std::abs(t) / eps) worst = std::max(worst, 1.0);
    }
  return worst;
}

// Samples an n x n grid covering the space (the full hyperboloid for
// k1 < 0, k2 < 0, where a single chart only covers a strip) and projects
// every sample stereographically.
inline CensusResult completion_census(const KappaPair& kp, double ell, int n) {
  CensusResult res;
  std::vector<WeierstrassPoint> samples;
  samples.reserve(static_cast<size_t>(n) * n);
  const double half_pi = std::asin(1.0);
  if (kp.k1 < 0.0 && kp.k2 < 0.0) {
    // quadric (x0)^2 + (x2)^2 = 1 - k1 (x1)^2 with x1 free
    const double q = std::sqrt(-kp.k1);
    for (int i = 0; i < n; ++i) {
      const double x1 = std::tan(half_pi * (2.0 * (i + 0.5) / n - 1.0)) / q;
      const double rad = std::sqrt(1.0 - kp.k1 * x1 * x1);
      for (int j = 0; j < n; ++j) {
        const double th = 4.0 * half_pi * j / n;
        samples.emplace_back(rad * std::cos(th), x1, rad * std::sin(th));
      }
    }
  } else {
    const double k12 = kp.k12();
    auto coord = [half_pi](double label, double frac) {
      // full period for a positive label, tan-compactified line otherwise
      if (label > 0.0) return 2.0 * half_pi * (2.0 * frac - 1.0) / std::sqrt(label);
      return std::tan(half_pi * (2.0 * frac - 1.0) * 0.999);
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double a = coord(kp.k1, (i + 0.5) / n);
        double y = coord(k12, (j + 0.5) / n);
        if (k12 > 0.0) y /= 2.0;  // transversal coordinate spans a half period
        samples.push_back(
            to_weierstrass(kp, {Chart::ParallelI, a, y}));
      }
  }
  for (const auto& w : samples) {
    ++res.attempted;
    Eigen::Vector3d st;
    try {
      st = stereographic(kp, ell, w);
    } catch (const PoleProjectionError&) {
      ++res.pole_hits;
      continue;
    }
    ++res.embedded;
    res.min_splus = std::min(res.min_splus, st(0));
    res.max_splus = std::max(res.max_splus, st(0));
    const double gap = (st - Eigen::Vector3d(-1.0, 0.0, 0.0)).norm();
    res.min_pole_gap = std::min(res.min_pole_gap, gap);
    res.min_slice_gap = std::min(res.min_slice_gap, std::abs(st(0) + 1.0));
  }
  return res;
}

}  // namespace ckgeom
