#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "ckgeom/errors.hpp"
#include "ckgeom/trig.hpp"

// The two-parameter family of Cayley-Klein spaces of constant curvature
// kappa1 and signature label kappa2, realised on the quadric
//   (x0)^2 + kappa1 (x1)^2 + kappa1 kappa2 (x2)^2 = 1
// with three geodesic charts: two "parallel" charts and a polar one.

namespace ckgeom {

struct KappaPair {
  double k1 = 0.0;
  double k2 = 0.0;

  KappaPair() = default;
  KappaPair(double kappa1, double kappa2) : k1(kappa1), k2(kappa2) {
    if (!std::isfinite(k1) || !std::isfinite(k2))
      throw DomainError("KappaPair: curvature labels must be finite");
  }
  double k12() const { return k1 * k2; }
};

// The nine symbolic spaces at unit scale.
inline KappaPair the_nine(std::string_view name) {
  if (name == "S2") return {1.0, 1.0};
  if (name == "E2") return {0.0, 1.0};
  if (name == "H2") return {-1.0, 1.0};
  if (name == "NH+" || name == "NHp") return {1.0, 0.0};
  if (name == "G") return {0.0, 0.0};
  if (name == "NH-" || name == "NHm") return {-1.0, 0.0};
  if (name == "AdS") return {1.0, -1.0};
  if (name == "M") return {0.0, -1.0};
  if (name == "dS") return {-1.0, -1.0};
  throw UnknownSpaceError("unknown space name: " + std::string(name));
}

enum class Chart { ParallelI, ParallelII, Polar };

inline const char* chart_name(Chart c) {
  switch (c) {
    case Chart::ParallelI: return "parallel1";
    case Chart::ParallelII: return "parallel2";
    case Chart::Polar: return "polar";
  }
  return "?";
}

// Coordinates: (a, y) in parallel I, (x, b) in parallel II, (r, phi) polar.
struct ChartPoint {
  Chart chart = Chart::ParallelI;
  double u1 = 0.0;
  double u2 = 0.0;
};

using WeierstrassPoint = Eigen::Vector3d;

// The diagonal bilinear form preserved by the motion group.
inline Eigen::Matrix3d ambient_form(const KappaPair& kp) {
  Eigen::Matrix3d L = Eigen::Matrix3d::Zero();
  L(0, 0) = 1.0;
  L(1, 1) = kp.k1;
  L(2, 2) = kp.k12();
  return L;
}

inline double quadric_residual(const KappaPair& kp, const WeierstrassPoint& w) {
  return w(0) * w(0) + kp.k1 * w(1) * w(1) + kp.k12() * w(2) * w(2) - 1.0;
}

// Chart domains.  Each parallel chart is valid while its transversal cosine
// stays positive; the polar chart excludes the origin and, for kappa1 > 0,
// stops at the antipodal radius.
inline void validate_chart_point(const KappaPair& kp, const ChartPoint& p) {
  if (!std::isfinite(p.u1) || !std::isfinite(p.u2))
    throw ChartDomainError("chart point has non-finite coordinates");
  switch (p.chart) {
    case Chart::ParallelI:
      if (ck(kp.k12(), p.u2) <= 0.0)
        throw ChartDomainError("parallel I: ck(k1 k2, y) <= 0");
      if (kp.k1 > 0 && std::abs(p.u1) > M_PI / std::sqrt(kp.k1))
        throw ChartDomainError("parallel I: |a| beyond the antipode");
      break;
    case Chart::ParallelII:
      if (ck(kp.k1, p.u1) <= 0.0)
        throw ChartDomainError("parallel II: ck(k1, x) <= 0");
      break;
    case Chart::Polar:
      if (p.u1 == 0.0)
        throw ChartDomainError("polar: r = 0 excluded");
      if (kp.k1 > 0 && std::abs(p.u1) > M_PI / std::sqrt(kp.k1))
        throw ChartDomainError("polar: |r| beyond the antipode");
      break;
  }
}

inline WeierstrassPoint to_weierstrass(const KappaPair& kp,
                                       const ChartPoint& p) {
  if (!std::isfinite(p.u1) || !std::isfinite(p.u2))
    throw ChartDomainError("chart point has non-finite coordinates");
  const double k1 = kp.k1, k12 = kp.k12(), k2 = kp.k2;
  WeierstrassPoint w;
  switch (p.chart) {
    case Chart::ParallelI: {
      const double a = p.u1, y = p.u2;
      w << ck(k1, a) * ck(k12, y), sk(k1, a) * ck(k12, y), sk(k12, y);
      break;
    }
    case Chart::ParallelII: {
      const double x = p.u1, b = p.u2;
      w << ck(k1, x) * ck(k12, b), sk(k1, x), ck(k1, x) * sk(k12, b);
      break;
    }
    case Chart::Polar: {
      const double r = p.u1, phi = p.u2;
      w << ck(k1, r), sk(k1, r) * ck(k2, phi), sk(k1, r) * sk(k2, phi);
      break;
    }
  }
  return w;
}

// Exact identity 1 - x0 = kappa1 * versine_defect(p); the defect stays finite
// through kappa1 = 0 and carries the quadratic information that x0 loses in
// the flat limit.
inline double versine_defect(const KappaPair& kp, const ChartPoint& p) {
  const double k1 = kp.k1, k12 = kp.k12(), k2 = kp.k2;
  switch (p.chart) {
    case Chart::ParallelI:
      return vk(k1, p.u1) + k2 * ck(k1, p.u1) * vk(k12, p.u2);
    case Chart::ParallelII:
      return vk(k1, p.u1) + k2 * ck(k1, p.u1) * vk(k12, p.u2);
    case Chart::Polar:
      return vk(k1, p.u1);
  }
  return 0.0;
}

inline ChartPoint from_weierstrass(const KappaPair& kp,
                                   const WeierstrassPoint& w, Chart chart) {
  if (std::abs(quadric_residual(kp, w)) > 1e-8)
    throw DomainError("from_weierstrass: point not on the quadric");
  const double k1 = kp.k1, k12 = kp.k12(), k2 = kp.k2;
  const double x0 = w(0), x1 = w(1), x2 = w(2);
  ChartPoint p;
  p.chart = chart;
  switch (chart) {
    case Chart::ParallelI: {
      double y;
      try {
        y = arc_sk(k12, x2);
      } catch (const DomainError&) {
        throw ChartCoverageError("parallel I: point outside the y-strip");
      }
      const double C = ck(k12, y);
      if (C <= 0.0)
        throw ChartCoverageError("parallel I: transversal cosine vanished");
      double a;
      if (k1 > 0) {
        const double q = std::sqrt(k1);
        a = std::atan2(q * x1, x0) / q;
      } else if (k1 < 0) {
        if (x0 <= 0.0)
          throw ChartCoverageError("parallel I: wrong sheet (x0 <= 0)");
        a = arc_sk(k1, x1 / C);
      } else {
        a = x1 / C;
      }
      p.u1 = a;
      p.u2 = y;
      break;
    }
    case Chart::ParallelII: {
      double x;
      try {
        x = arc_sk(k1, x1);
      } catch (const DomainError&) {
        throw ChartCoverageError("parallel II: point outside the x-strip");
      }
      const double C = ck(k1, x);
      if (C <= 0.0)
        throw ChartCoverageError("parallel II: base cosine vanished");
      if (k1 < 0 && x0 <= 0.0)
        throw ChartCoverageError("parallel II: wrong sheet (x0 <= 0)");
      double b;
      if (k12 > 0) {
        const double q = std::sqrt(k12);
        b = std::atan2(q * x2, x0) / q;
      } else if (k12 < 0) {
        b = arc_sk(k12, x2 / C);
      } else {
        b = x2 / C;
      }
      p.u1 = x;
      p.u2 = b;
      break;
    }
    case Chart::Polar: {
      if (std::abs(x1) < 1e-12 && std::abs(x2) < 1e-12) {
        p.u1 = 0.0;  // origin, by convention (r, phi) = (0, 0)
        p.u2 = 0.0;
        break;
      }
      double r;
      if (k1 > 0) {
        try {
          r = arc_ck(k1, x0);
        } catch (const DomainError&) {
          // |x0| > 1 happens off the polar cap when k1 k2 < 0
          throw ChartCoverageError("polar: point outside the radial range");
        }
      } else if (k1 < 0) {
        if (x0 < 1.0 - 1e-10)
          throw ChartCoverageError("polar: point outside the radial cone");
        r = arc_ck(k1, std::max(x0, 1.0));
      } else {
        const double s2 = x1 * x1 + k2 * x2 * x2;
        if (s2 <= 0.0)
          throw ChartCoverageError("polar: point outside the causal cone");
        r = std::sqrt(s2);
      }
      double phi;
      if (k2 > 0) {
        const double q = std::sqrt(k2);
        phi = std::atan2(q * x2, x1) / q;
      } else {
        if (x1 <= 0.0)
          throw ChartCoverageError("polar: point outside the forward cone");
        try {
          phi = (k2 < 0) ? arc_tk(k2, x2 / x1) : x2 / x1;
        } catch (const DomainError&) {
          throw ChartCoverageError("polar: point outside the causal cone");
        }
      }
      p.u1 = r;
      p.u2 = phi;
      break;
    }
  }
  return p;
}

inline ChartPoint convert(const KappaPair& kp, const ChartPoint& p,
                          Chart target) {
  if (p.chart == target) return p;
  return from_weierstrass(kp, to_weierstrass(kp, p), target);
}

struct MetricAtPoint {
  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;
  bool has_subsidiary = false;  // leafwise metric, kappa2 = 0 only
  double subsidiary = 0.0;      // coefficient on the leaf coordinate
};

inline MetricAtPoint metric_at(const KappaPair& kp, const ChartPoint& p) {
  validate_chart_point(kp, p);
  const double k1 = kp.k1, k12 = kp.k12(), k2 = kp.k2;
  MetricAtPoint m;
  switch (p.chart) {
    case Chart::ParallelI: {
      const double C = ck(k12, p.u2);
      m.g11 = C * C;
      m.g22 = k2;
      if (k2 == 0.0) { m.has_subsidiary = true; m.subsidiary = 1.0; }
      break;
    }
    case Chart::ParallelII: {
      const double C = ck(k1, p.u1);
      m.g11 = 1.0;
      m.g22 = k2 * C * C;
      if (k2 == 0.0) { m.has_subsidiary = true; m.subsidiary = C * C; }
      break;
    }
    case Chart::Polar: {
      const double S = sk(k1, p.u1);
      m.g11 = 1.0;
      m.g22 = k2 * S * S;
      if (k2 == 0.0) { m.has_subsidiary = true; m.subsidiary = S * S; }
      break;
    }
  }
  return m;
}

// Christoffel symbols gamma[i][j][k] = Gamma^i_{jk} in chart coordinate
// order (u1, u2).
using ChristoffelSymbols = std::array<std::array<std::array<double, 2>, 2>, 2>;

inline ChristoffelSymbols christoffel(const KappaPair& kp,
                                      const ChartPoint& p) {
  validate_chart_point(kp, p);
  const double k1 = kp.k1, k12 = kp.k12(), k2 = kp.k2;
  ChristoffelSymbols g{};
  switch (p.chart) {
    case Chart::ParallelI: {
      g[1][0][0] = k1 * sk(k12, p.u2) * ck(k12, p.u2);
      g[0][0][1] = g[0][1][0] = -k12 * tk(k12, p.u2);
      break;
    }
    case Chart::ParallelII: {
      g[0][1][1] = k12 * sk(k1, p.u1) * ck(k1, p.u1);
      g[1][0][1] = g[1][1][0] = -k1 * tk(k1, p.u1);
      break;
    }
    case Chart::Polar: {
      const double t = tk(k1, p.u1);
      if (std::abs(t) < kPoleTol)
        throw PoleError("christoffel: polar chart at r = 0");
      g[0][1][1] = -k2 * sk(k1, p.u1) * ck(k1, p.u1);
      g[1][0][1] = g[1][1][0] = 1.0 / t;
      break;
    }
  }
  return g;
}

inline double area_element(const KappaPair& kp, const ChartPoint& p) {
  switch (p.chart) {
    case Chart::ParallelI: return ck(kp.k12(), p.u2);
    case Chart::ParallelII: return ck(kp.k1, p.u1);
    case Chart::Polar: return sk(kp.k1, p.u1);
  }
  return 0.0;
}

}  // namespace ckgeom
