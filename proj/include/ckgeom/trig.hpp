#pragma once

#include <cmath>
#include <utility>

#include "ckgeom/errors.hpp"

// Curvature-labelled trigonometry.  Every function takes the label kappa as
// its first argument and degrades smoothly through kappa = 0: whenever
// |kappa| x^2 falls below a threshold the closed form is replaced by a short
// Taylor expansion, so values and derivatives are continuous in kappa.

namespace ckgeom {

inline constexpr double kSeriesThreshold = 1e-8;  // on |kappa * x^2|
inline constexpr double kPoleTol = 1e-13;

// cosine: cos(sqrt(k) x) / 1 / cosh(sqrt(-k) x)
inline double ck(double kappa, double x) {
  const double u = kappa * x * x;
  if (std::abs(u) < kSeriesThreshold)
    return 1.0 - u / 2.0 + u * u / 24.0 - u * u * u / 720.0;
  if (kappa > 0) return std::cos(std::sqrt(kappa) * x);
  return std::cosh(std::sqrt(-kappa) * x);
}

// sine: sin(sqrt(k) x)/sqrt(k) / x / sinh(sqrt(-k) x)/sqrt(-k)
inline double sk(double kappa, double x) {
  const double u = kappa * x * x;
  if (std::abs(u) < kSeriesThreshold)
    return x * (1.0 - u / 6.0 + u * u / 120.0 - u * u * u / 5040.0);
  if (kappa > 0) {
    const double q = std::sqrt(kappa);
    return std::sin(q * x) / q;
  }
  const double q = std::sqrt(-kappa);
  return std::sinh(q * x) / q;
}

// versine: (1 - ck)/kappa, computed cancellation-free via the half-argument
// square so the kappa -> 0 limit x^2/2 needs no special case.
inline double vk(double kappa, double x) {
  const double s = sk(kappa, x / 2.0);
  return 2.0 * s * s;
}

inline double tk(double kappa, double x) {
  const double c = ck(kappa, x);
  if (std::abs(c) < kPoleTol) throw PoleError("tk: argument at a pole of ck");
  return sk(kappa, x) / c;
}

// Inverses (principal branches).

inline double arc_sk(double kappa, double y) {
  const double u = kappa * y * y;
  if (std::abs(u) < kSeriesThreshold)
    return y * (1.0 + u / 6.0 + 3.0 * u * u / 40.0);
  if (kappa > 0) {
    const double q = std::sqrt(kappa);
    double t = q * y;
    if (std::abs(t) > 1.0 + 1e-12)
      throw DomainError("arc_sk: |sqrt(kappa) y| > 1");
    if (t > 1.0) t = 1.0;
    if (t < -1.0) t = -1.0;
    return std::asin(t) / q;
  }
  const double q = std::sqrt(-kappa);
  return std::asinh(q * y) / q;
}

inline double arc_ck(double kappa, double y) {
  if (kappa > 0) {
    double t = y;
    if (std::abs(t) > 1.0 + 1e-12)
      throw DomainError("arc_ck: value outside [-1,1]");
    if (t > 1.0) t = 1.0;
    if (t < -1.0) t = -1.0;
    return std::acos(t) / std::sqrt(kappa);
  }
  if (kappa < 0) {
    if (y < 1.0 - 1e-12) throw DomainError("arc_ck: value below 1");
    return std::acosh(y < 1.0 ? 1.0 : y) / std::sqrt(-kappa);
  }
  if (std::abs(y - 1.0) > 1e-12)
    throw DomainError("arc_ck: ck is identically 1 at kappa = 0");
  return 0.0;
}

inline double arc_tk(double kappa, double y) {
  const double u = kappa * y * y;
  if (std::abs(u) < kSeriesThreshold)
    return y * (1.0 - u / 3.0 + u * u / 5.0);
  if (kappa > 0) {
    const double q = std::sqrt(kappa);
    return std::atan(q * y) / q;
  }
  const double q = std::sqrt(-kappa);
  if (std::abs(q * y) >= 1.0)
    throw DomainError("arc_tk: |sqrt(-kappa) y| >= 1");
  return std::atanh(q * y) / q;
}

inline double arc_vk(double kappa, double y) {
  if (y < 0.0) {
    if (y > -1e-14) y = 0.0;
    else throw DomainError("arc_vk: negative versine");
  }
  const double u = kappa * y;
  if (std::abs(u) < kSeriesThreshold)
    return std::sqrt(2.0 * y) * (1.0 + u / 12.0);
  return arc_ck(kappa, 1.0 - kappa * y);
}

// Derivatives of the forward family.

inline double d_ck(double kappa, double x) { return -kappa * sk(kappa, x); }
inline double d_sk(double kappa, double x) { return ck(kappa, x); }

inline double d_tk(double kappa, double x) {
  const double c = ck(kappa, x);
  if (std::abs(c) < kPoleTol) throw PoleError("d_tk: argument at a pole of ck");
  return 1.0 / (c * c);
}

inline double d_vk(double kappa, double x) { return sk(kappa, x); }

// Derivatives of the arc family (1/sqrt(1-k y^2), etc.).

inline double d_arc_sk(double kappa, double y) {
  const double r = 1.0 - kappa * y * y;
  if (r <= 0.0) throw DomainError("d_arc_sk: 1 - kappa y^2 <= 0");
  return 1.0 / std::sqrt(r);
}

inline double d_arc_tk(double kappa, double y) {
  return 1.0 / (1.0 + kappa * y * y);
}

// Integral of the secant: Lambda_kappa(x) = int_0^x dt / ck(t).
// kappa > 0 gives the inverse Gudermannian scaled by sqrt(kappa); kappa < 0
// gives the Gudermannian itself.  Principal branch |x| < pi/(2 sqrt(kappa)).
inline double lambda_fn(double kappa, double x) {
  const double u = kappa * x * x;
  if (std::abs(u) < kSeriesThreshold)
    return x * (1.0 + u / 6.0 + u * u / 24.0);
  if (kappa > 0) {
    const double q = std::sqrt(kappa);
    const double half = 0.5 * M_PI / q;
    if (std::abs(x) >= half)
      throw DomainError("lambda_fn: argument at or beyond the pole");
    return 2.0 * std::atanh(std::tan(q * x / 2.0)) / q;
  }
  const double q = std::sqrt(-kappa);
  return 2.0 * std::atan(std::tanh(q * x / 2.0)) / q;
}

enum class LambdaBranch { principal, second_copy };

// Extension of lambda_fn to the full circle (-pi/sqrt(k), pi/sqrt(k)] for
// kappa > 0.  Beyond the pole the image lies on a second hyperbolic copy,
// parametrised by continuing through the antipode: the branch value is
// lambda_fn(kappa, x -/+ pi/sqrt(kappa)), zero at the antipode itself.
inline std::pair<double, LambdaBranch> lambda_extended(double kappa, double x) {
  if (kappa <= 0.0)
    throw DomainError("lambda_extended: requires kappa > 0");
  const double q = std::sqrt(kappa);
  const double period = 2.0 * M_PI / q;
  x = std::remainder(x, period);  // into (-pi/q, pi/q]
  if (x <= -M_PI / q) x += period;
  const double half = 0.5 * M_PI / q;
  if (std::abs(std::abs(x) - half) < 1e-15 * std::max(1.0, half))
    throw DomainError("lambda_extended: argument at the pole");
  if (std::abs(x) < half)
    return {lambda_fn(kappa, x), LambdaBranch::principal};
  const double shifted = x > 0 ? x - M_PI / q : x + M_PI / q;
  return {lambda_fn(kappa, shifted), LambdaBranch::second_copy};
}

inline double d_lambda_fn(double kappa, double x) {
  const double c = ck(kappa, x);
  if (std::abs(c) < kPoleTol)
    throw PoleError("d_lambda_fn: argument at a pole of ck");
  return 1.0 / c;
}

}  // namespace ckgeom
