#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "ckgeom/errors.hpp"
#include "ckgeom/space.hpp"
#include "ckgeom/trig.hpp"

// Motion group of the quadric: the 3x3 matrix realisation of the Lie algebra
// with brackets [J,P1] = P2, [J,P2] = -k2 P1, [P1,P2] = k1 J, its
// one-parameter subgroups in closed form, and the fundamental vector fields
// of the generators in each chart.

namespace ckgeom {

enum class MotionGen { P1, P2, J12 };

inline Eigen::Matrix3d generator_matrix(const KappaPair& kp, MotionGen g) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  switch (g) {
    case MotionGen::P1:
      m(0, 1) = -kp.k1;
      m(1, 0) = 1.0;
      break;
    case MotionGen::P2:
      m(0, 2) = -kp.k12();
      m(2, 0) = 1.0;
      break;
    case MotionGen::J12:
      m(1, 2) = -kp.k2;
      m(2, 1) = 1.0;
      break;
  }
  return m;
}

inline Eigen::Matrix3d one_param(const KappaPair& kp, MotionGen g, double t) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  switch (g) {
    case MotionGen::P1: {
      const double c = ck(kp.k1, t), s = sk(kp.k1, t);
      m(0, 0) = c; m(0, 1) = -kp.k1 * s;
      m(1, 0) = s; m(1, 1) = c;
      break;
    }
    case MotionGen::P2: {
      const double c = ck(kp.k12(), t), s = sk(kp.k12(), t);
      m(0, 0) = c; m(0, 2) = -kp.k12() * s;
      m(2, 0) = s; m(2, 2) = c;
      break;
    }
    case MotionGen::J12: {
      const double c = ck(kp.k2, t), s = sk(kp.k2, t);
      m(1, 1) = c; m(1, 2) = -kp.k2 * s;
      m(2, 1) = s; m(2, 2) = c;
      break;
    }
  }
  return m;
}

inline WeierstrassPoint act(const Eigen::Matrix3d& g,
                            const WeierstrassPoint& w) {
  return g * w;
}

inline ChartPoint act(const KappaPair& kp, const Eigen::Matrix3d& g,
                      const ChartPoint& p) {
  return from_weierstrass(kp, g * to_weierstrass(kp, p), p.chart);
}

inline Eigen::Matrix3d compose(const Eigen::Matrix3d& g,
                               const Eigen::Matrix3d& h) {
  return g * h;
}

inline double isometry_defect(const KappaPair& kp, const Eigen::Matrix3d& g) {
  const Eigen::Matrix3d L = ambient_form(kp);
  return (g.transpose() * L * g - L).cwiseAbs().maxCoeff();
}

// Inverse via the adjoint with respect to the ambient form when it is
// non-degenerate, plain LU otherwise.
inline Eigen::Matrix3d inverse(const KappaPair& kp, const Eigen::Matrix3d& g) {
  if (std::abs(kp.k12()) > 1e-12 && std::abs(kp.k1) > 1e-12) {
    const Eigen::Matrix3d L = ambient_form(kp);
    Eigen::Matrix3d Linv = Eigen::Matrix3d::Zero();
    Linv(0, 0) = 1.0;
    Linv(1, 1) = 1.0 / kp.k1;
    Linv(2, 2) = 1.0 / kp.k12();
    return Linv * g.transpose() * L;
  }
  Eigen::FullPivLU<Eigen::Matrix3d> lu(g);
  if (!lu.isInvertible())
    throw SingularMatrixError("inverse: singular group element");
  return lu.inverse();
}

// Fundamental vector field of a generator at a chart point, components in
// the chart coordinates.
inline Eigen::Vector2d generator_field(const KappaPair& kp, MotionGen g,
                                       const ChartPoint& p) {
  validate_chart_point(kp, p);
  const double k1 = kp.k1, k2 = kp.k2, k12 = kp.k12();
  Eigen::Vector2d v;
  switch (p.chart) {
    case Chart::ParallelI: {
      const double a = p.u1, y = p.u2;
      switch (g) {
        case MotionGen::P1: v << -1.0, 0.0; break;
        case MotionGen::P2:
          v << -k12 * sk(k1, a) * tk(k12, y), -ck(k1, a);
          break;
        case MotionGen::J12:
          v << k2 * ck(k1, a) * tk(k12, y), -sk(k1, a);
          break;
      }
      break;
    }
    case Chart::ParallelII: {
      const double x = p.u1, b = p.u2;
      switch (g) {
        case MotionGen::P1:
          v << -ck(k12, b), -k1 * tk(k1, x) * sk(k12, b);
          break;
        case MotionGen::P2: v << 0.0, -1.0; break;
        case MotionGen::J12:
          v << k2 * sk(k12, b), -tk(k1, x) * ck(k12, b);
          break;
      }
      break;
    }
    case Chart::Polar: {
      const double r = p.u1, phi = p.u2;
      const double t = tk(k1, r);
      switch (g) {
        case MotionGen::P1: v << -ck(k2, phi), sk(k2, phi) / t; break;
        case MotionGen::P2: v << -k2 * sk(k2, phi), -ck(k2, phi) / t; break;
        case MotionGen::J12: v << 0.0, -1.0; break;
      }
      break;
    }
  }
  return v;
}

}  // namespace ckgeom
