#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "ckgeom/errors.hpp"
#include "ckgeom/motion.hpp"
#include "ckgeom/numeric.hpp"
#include "ckgeom/space.hpp"
#include "ckgeom/trig.hpp"

// Cycles: the curves of constant geodesic curvature, realised projectively
// by the linear equation  alpha0 x0 + alpha1 x1 + alpha2 x2 = alpha  on the
// quadric.  At kappa1 = 0 genuine circles escape the linear family (x0 is
// identically 1 there); they are kept as the kappa1-rescaled limit of the
// coefficients, flagged by flat_circle, whose residual picks up the exact
// quadratic defect (1 - x0)/kappa1.

namespace ckgeom {

struct Cycle {
  Eigen::Vector4d c = Eigen::Vector4d::Zero();  // (alpha0, alpha1, alpha2, alpha)
  bool flat_circle = false;
};

inline Cycle normalized(Cycle cy) {
  const double n = cy.c.norm();
  if (n < 1e-300) throw DegenerateCycleError("cycle with zero coefficients");
  cy.c /= n;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(cy.c(i)) > 1e-12) {
      if (cy.c(i) < 0) cy.c = -cy.c;
      break;
    }
  }
  return cy;
}

inline bool same_cycle(const Cycle& a, const Cycle& b, double tol = 1e-10) {
  if (a.flat_circle != b.flat_circle) return false;
  return (normalized(a).c - normalized(b).c).cwiseAbs().maxCoeff() <= tol;
}

// Geodesic through exp(a P1) O in parallel I form
// tk(k1 k2, y) = beta0 ck(k1, a) + beta1 sk(k1, a).
inline Cycle geodesic_from_betas(const KappaPair&, double beta0, double beta1) {
  Cycle cy;
  cy.c << -beta0, -beta1, 1.0, 0.0;
  return normalized(cy);
}

// Circle of radius rho around a center: coefficients are the ambient-form
// image of the center, alpha = ck(k1, rho).  At kappa1 = 0 the rescaled
// representation is used.
inline Cycle circle(const KappaPair& kp, const ChartPoint& center,
                    double rho) {
  Cycle cy;
  if (kp.k1 == 0.0) {
    const ChartPoint c0 = convert(kp, center, Chart::ParallelI);
    const double a0 = c0.u1, y0 = c0.u2;
    cy.flat_circle = true;
    cy.c << 1.0, a0, kp.k2 * y0,
        1.0 + 0.5 * (a0 * a0 + kp.k2 * y0 * y0 - rho * rho);
    return normalized(cy);
  }
  const WeierstrassPoint w = to_weierstrass(kp, center);
  cy.c.head<3>() = ambient_form(kp) * w;
  cy.c(3) = ck(kp.k1, rho);
  return normalized(cy);
}

// Equidistant at distance d from the base geodesic.  With timelike = false
// the base is given in parallel I form (betas beta0, beta1), with
// timelike = true in parallel II form (betas beta0, beta2), which realises
// the documented role swap a <-> y, alpha1 <-> alpha2.
inline Cycle equidistant(const KappaPair& kp, double beta0, double betab,
                         double d, bool timelike = false) {
  if (kp.k2 == 0.0)
    throw DegenerateMetricError("equidistant: undefined at kappa2 = 0");
  const double disc = timelike
      ? 1.0 + betab * betab / kp.k2 + kp.k1 * beta0 * beta0
      : 1.0 / kp.k2 + betab * betab + kp.k1 * beta0 * beta0;
  if (std::abs(disc) < 1e-12)
    throw IsotropicBaseError("equidistant: isotropic base geodesic");
  if (disc < 0.0)
    throw DomainError("equidistant: base geodesic of the opposite causal type");
  const double alpha =
      (d < 0 ? -1.0 : 1.0) * sk(kp.k1, std::abs(d)) * std::sqrt(disc);
  Cycle cy;
  if (timelike)
    cy.c << -beta0, 1.0, -betab, alpha;
  else
    cy.c << -beta0, -betab, 1.0, alpha;
  return normalized(cy);
}

// Residual of the cycle equation at a chart point.  Linear cycles use the
// exact Weierstrass form; flat circles use the rescaled form built on the
// versine defect.
inline double evaluate(const Cycle& cy, const KappaPair& kp,
                       const ChartPoint& p) {
  const WeierstrassPoint w = to_weierstrass(kp, p);
  const double a0 = cy.c(0), a1 = cy.c(1), a2 = cy.c(2), al = cy.c(3);
  if (!cy.flat_circle)
    return a0 * w(0) + a1 * w(1) + a2 * w(2) - al;
  // alpha1 x1 + alpha2 x2 - (alpha - alpha0) - alpha0 Q, Q = (1 - x0)/kappa1
  return a1 * w(1) + a2 * w(2) - (al - a0) - a0 * versine_defect(kp, p);
}

// Equivalent chart-local forms of the same equation, kept separate so their
// agreement can be checked: parallel I form (lhs - rhs of the first row of
// the cycle table) and the Lambda-translated form.
inline double evaluate_parallel1_form(const Cycle& cy, const KappaPair& kp,
                                      const ChartPoint& p) {
  if (cy.flat_circle) return evaluate(cy, kp, p);
  const ChartPoint q = convert(kp, p, Chart::ParallelI);
  const double k1 = kp.k1, k12 = kp.k12();
  const double C = ck(k12, q.u2);
  if (std::abs(C) < kPoleTol) throw PoleError("cycle form: ck(k1 k2, y) = 0");
  return cy.c(0) * ck(k1, q.u1) + cy.c(1) * sk(k1, q.u1) -
         cy.c(3) / C + cy.c(2) * tk(k12, q.u2);
}

inline double evaluate_lambda_form(const Cycle& cy, const KappaPair& kp,
                                   const ChartPoint& p) {
  if (cy.flat_circle) return evaluate(cy, kp, p);
  const ChartPoint q = convert(kp, p, Chart::ParallelI);
  const double k1 = kp.k1, k12 = kp.k12();
  const double yh = lambda_fn(k12, q.u2);
  return cy.c(0) * ck(k1, q.u1) + cy.c(1) * sk(k1, q.u1) -
         cy.c(3) * ck(-k12, yh) + cy.c(2) * sk(-k12, yh);
}

inline double geodesic_curvature(const KappaPair& kp, const Cycle& cy) {
  const double a0 = cy.c(0), a1 = cy.c(1), a2 = cy.c(2), al = cy.c(3);
  if (cy.flat_circle) {
    const double num = kp.k2 * a0 * a0;
    if (num == 0.0) return 0.0;
    const double den = a2 * a2 + kp.k2 * a1 * a1 -
                       2.0 * kp.k2 * a0 * (al - a0);
    if (den == 0.0 || num / den <= 0.0)
      throw ImaginaryCurvatureError("flat circle with non-positive kg^2");
    return std::sqrt(num / den);
  }
  if (std::abs(al) < 1e-14 * cy.c.norm()) return 0.0;  // geodesic
  const double den = a2 * a2 + kp.k2 * a1 * a1 +
                     kp.k12() * (a0 * a0 - al * al);
  const double num = kp.k1 * kp.k1 * al * al * kp.k2;
  if (num == 0.0) return 0.0;  // kappa1 = 0 or kappa2 = 0: lines stay lines
  if (num / den <= 0.0)
    throw ImaginaryCurvatureError("cycle with non-positive kg^2");
  return std::sqrt(num / den);
}

enum class CycleKind { Geodesic, NonGenericLine, Circle, Equidistant, Horocycle };

inline CycleKind classify(const KappaPair& kp, const Cycle& cy) {
  const Cycle n = normalized(cy);
  if (!n.flat_circle && std::abs(n.c(3)) < 1e-12) {
    if (std::abs(n.c(2)) < 1e-12) return CycleKind::NonGenericLine;
    return CycleKind::Geodesic;
  }
  const double kg = geodesic_curvature(kp, n);
  if (kg == 0.0) return CycleKind::Geodesic;
  if (kp.k1 >= 0.0) return CycleKind::Circle;
  const double h = std::sqrt(-kp.k1);
  if (std::abs(kg - h) <= 1e-9 * std::max(1.0, h)) return CycleKind::Horocycle;
  return kg < h ? CycleKind::Equidistant : CycleKind::Circle;
}

// Power of the origin with respect to a cycle:
// tk(k1, r1/2) tk(k1, r2/2) over the radii cut on any line through O.
inline double power_of_origin(const KappaPair& kp, const Cycle& cy) {
  const double a0 = cy.c(0), al = cy.c(3);
  if (cy.flat_circle) {
    if (std::abs(a0) < 1e-14 * cy.c.norm())
      throw DegenerateCycleError("power_of_origin: degenerate flat cycle");
    return (al - a0) / (2.0 * a0);  // here r1 r2 = 4 * power
  }
  if (kp.k1 == 0.0)
    throw DomainError("power_of_origin: linear cycle at kappa1 = 0");
  const double den = al + a0;
  if (std::abs(den) < 1e-14 * cy.c.norm())
    throw DegenerateCycleError("power_of_origin: alpha + alpha0 = 0");
  return (al - a0) / (kp.k1 * den);
}

// Radii cut by the cycle on the ray of polar angle phi: the roots of
//   k1 (alpha + alpha0) t^2 - 2 (alpha1 ck(k2,phi) + alpha2 sk(k2,phi)) t
//     + (alpha - alpha0) = 0,   t = tk(k1, r/2).
inline std::vector<double> radii_on_ray(const Cycle& cy, const KappaPair& kp,
                                        double phi) {
  const double a0 = cy.c(0), a1 = cy.c(1), a2 = cy.c(2), al = cy.c(3);
  const double m = a1 * ck(kp.k2, phi) + a2 * sk(kp.k2, phi);
  std::vector<double> out;
  auto push_r = [&](double t) {
    if (!std::isfinite(t)) return;
    try {
      const double r = cy.flat_circle ? t : 2.0 * arc_tk(kp.k1, t);
      if (std::isfinite(r) && std::abs(r) > 1e-14) out.push_back(r);
    } catch (const DomainError&) {
    }
  };
  if (cy.flat_circle) {
    // a0 r^2 - 2 m r + 2 (al - a0) = 0
    const double disc = m * m - 2.0 * a0 * (al - a0);
    if (disc < 0.0) return out;
    const double s = std::sqrt(disc);
    push_r((m + s) / a0);
    push_r((m - s) / a0);
    return out;
  }
  const double A = kp.k1 * (al + a0), B = -2.0 * m, C = al - a0;
  if (std::abs(A) < 1e-14) {
    if (std::abs(B) > 1e-14) push_r(-C / B);
    return out;
  }
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return out;
  const double s = std::sqrt(disc);
  // stable quadratic roots
  const double q = -0.5 * (B + (B >= 0 ? s : -s));
  push_r(q / A);
  if (std::abs(q) > 1e-300) push_r(C / q);
  return out;
}

// Sampled points of a cycle, polar chart.
inline std::vector<ChartPoint> sample_cycle(const Cycle& cy,
                                            const KappaPair& kp, int n) {
  std::vector<ChartPoint> pts;
  const double span = kp.k2 > 0 ? 2.0 * M_PI / std::sqrt(kp.k2) : 6.0;
  const double lo = kp.k2 > 0 ? 0.0 : -3.0;
  for (int i = 0; i < n && (int)pts.size() < n; ++i) {
    const double phi = lo + span * (i + 0.5) / n;
    for (double r : radii_on_ray(cy, kp, phi)) {
      // rays with kappa2 <= 0 only sweep the forward cone; keep the
      // negative-radius branch to reach the backward one
      if (r <= 0.0 && kp.k2 > 0) continue;
      if (kp.k1 > 0 && std::abs(r) >= M_PI / std::sqrt(kp.k1)) continue;
      pts.push_back(ChartPoint{Chart::Polar, r, phi});
      if ((int)pts.size() >= n) break;
    }
  }
  return pts;
}

// Distance between two points.  Computed through the cancellation-free
// versine composition law in parallel I coordinates, falling back to the
// ambient cosine form when a point escapes that chart.
inline double distance(const KappaPair& kp, const ChartPoint& p,
                       const ChartPoint& q) {
  const double k1 = kp.k1, k2 = kp.k2, k12 = kp.k12();
  if (k2 == 0.0) {
    const ChartPoint p1 = convert(kp, p, Chart::ParallelI);
    const ChartPoint q1 = convert(kp, q, Chart::ParallelI);
    const double da = q1.u1 - p1.u1;
    if (std::abs(da) > 1e-12 * std::max(1.0, std::abs(p1.u1)))
      return arc_vk(k1, vk(k1, da));  // main distance between leaves
    return std::abs(q1.u2 - p1.u2);   // subsidiary, within a leaf
  }
  try {
    const ChartPoint p1 = convert(kp, p, Chart::ParallelI);
    const ChartPoint q1 = convert(kp, q, Chart::ParallelI);
    const double V = ck(k12, p1.u2) * ck(k12, q1.u2) * vk(k1, q1.u1 - p1.u1) +
                     k2 * vk(k12, q1.u2 - p1.u2);
    if (V < 0.0) throw CausalityError("distance: negative versine separation");
    return arc_vk(k1, std::min(V, k1 > 0 ? 2.0 / k1 : V));
  } catch (const ChartCoverageError&) {
    const double B = to_weierstrass(kp, p).transpose() * ambient_form(kp) *
                     to_weierstrass(kp, q);
    if (k1 == 0.0) throw;
    try {
      return arc_ck(k1, B);
    } catch (const DomainError&) {
      throw CausalityError("distance: points not joined by this geodesic type");
    }
  }
}

// Arc length and sector area swept by angle psi at radius rho.
inline std::pair<double, double> arc_and_sector(const KappaPair& kp,
                                                double rho, double psi) {
  return {sk(kp.k1, rho) * psi, vk(kp.k1, rho) * psi};
}

// Geodesic curvature recomputed numerically from scratch: implicit tangent
// of the residual, unit-speed normalisation in the chart metric, covariant
// acceleration through the Christoffel symbols, norm of the normal part.
// Residual derivatives come from central differences with one Richardson
// step; everything metric is closed-form.  The default step keeps the
// roundoff floor of the second differences near 1e-9; smaller steps only
// amplify cancellation noise here.
inline double kg_numeric(const KappaPair& kp, const Cycle& cy,
                         const ChartPoint& p, double h = 1e-3) {
  if (kp.k2 == 0.0)
    throw DegenerateMetricError("kg_numeric: degenerate metric");
  ChartPoint q = p;
  // the polar chart is singular at the origin; finite differences there
  // lose digits, so nearby points are moved to the first parallel chart
  if (q.chart == Chart::Polar && std::abs(q.u1) < 0.2) {
    try {
      q = convert(kp, q, Chart::ParallelI);
    } catch (const Error&) {
    }
  }
  validate_chart_point(kp, q);
  const Chart chart = q.chart;
  const Fn2 F = [&](double u, double v) {
    return evaluate(cy, kp, ChartPoint{chart, u, v});
  };
  const double F1 = fd_partial(F, q.u1, q.u2, 0, h);
  const double F2 = fd_partial(F, q.u1, q.u2, 1, h);
  const MetricAtPoint m = metric_at(kp, q);
  const double g[2][2] = {{m.g11, m.g12}, {m.g12, m.g22}};
  // implicit tangent, unit speed in |g|
  double T[2] = {-F2, F1};
  double n2 = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) n2 += g[i][j] * T[i] * T[j];
  if (std::abs(n2) < 1e-20)
    throw ImaginaryCurvatureError("kg_numeric: null tangent");
  const double inv = 1.0 / std::sqrt(std::abs(n2));
  T[0] *= inv;
  T[1] *= inv;
  const ChristoffelSymbols G = christoffel(kp, q);
  // second derivatives of the residual
  double Fij[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) Fij[i][j] = fd_second(F, q.u1, q.u2, i, j, h);
  // u'' from  F_i u''^i = -F_ij u'^i u'^j  and
  //           g(u'', u') = -g_{il} Gamma^l_{jk} u'^i u'^j u'^k
  double rhs1 = 0.0, rhs2 = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      rhs1 -= Fij[i][j] * T[i] * T[j];
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          rhs2 -= g[i][l] * G[l][j][k] * T[i] * T[j] * T[k];
    }
  const double gu[2] = {g[0][0] * T[0] + g[0][1] * T[1],
                        g[1][0] * T[0] + g[1][1] * T[1]};
  const double det = F1 * gu[1] - F2 * gu[0];
  if (std::abs(det) < 1e-20)
    throw ImaginaryCurvatureError("kg_numeric: degenerate tangent system");
  const double upp[2] = {(rhs1 * gu[1] - F2 * rhs2) / det,
                         (F1 * rhs2 - rhs1 * gu[0]) / det};
  // covariant acceleration
  double v[2] = {upp[0], upp[1]};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) v[i] += G[i][j][k] * T[j] * T[k];
  double kg2 = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) kg2 += g[i][j] * v[i] * v[j];
  return std::sqrt(std::abs(kg2));
}

// How far the cycle tangent at p is from being null: |g(T,T)| relative to
// the termwise magnitude.  Near zero the curvature decomposition (and its
// numerical version) degenerates.
inline double tangent_conditioning(const KappaPair& kp, const Cycle& cy,
                                   const ChartPoint& p) {
  const Chart chart = p.chart;
  const Fn2 F = [&](double u, double v) {
    return evaluate(cy, kp, ChartPoint{chart, u, v});
  };
  const double T0 = -fd_partial(F, p.u1, p.u2, 1);
  const double T1 = fd_partial(F, p.u1, p.u2, 0);
  const MetricAtPoint m = metric_at(kp, p);
  const double num = m.g11 * T0 * T0 + 2 * m.g12 * T0 * T1 + m.g22 * T1 * T1;
  const double den = std::abs(m.g11 * T0 * T0) +
                     2 * std::abs(m.g12 * T0 * T1) +
                     std::abs(m.g22 * T1 * T1);
  if (den < 1e-300) return 0.0;
  return std::abs(num) / den;
}

// Coefficients of the image cycle under a motion g (points w -> g w).
inline Cycle transform_cycle(const KappaPair& kp, const Eigen::Matrix3d& g,
                             const Cycle& cy) {
  if (cy.flat_circle)
    throw DomainError("transform_cycle: flat circles not supported");
  Cycle out;
  out.c.head<3>() =
      inverse(kp, g).transpose() * Eigen::Vector3d(cy.c.head<3>());
  out.c(3) = cy.c(3);
  return normalized(out);
}

}  // namespace ckgeom
