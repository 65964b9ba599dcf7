#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "ckgeom/space.hpp"

namespace testutil {

// Independent matrix exponential oracle: scaling and squaring on the plain
// Taylor series.
template <typename Mat>
Mat expm(const Mat& A) {
  const double nrm = A.cwiseAbs().sum();
  int s = 0;
  if (nrm > 0.5) s = (int)std::ceil(std::log2(nrm / 0.5));
  Mat B = A / std::pow(2.0, s);
  Mat term = Mat::Identity(A.rows(), A.cols());
  Mat sum = term;
  for (int k = 1; k < 40; ++k) {
    term = term * B / (double)k;
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

inline std::vector<ckgeom::KappaPair> nine_spaces() {
  using ckgeom::KappaPair;
  return {KappaPair{1, 1},  KappaPair{0, 1},  KappaPair{-1, 1},
          KappaPair{1, 0},  KappaPair{0, 0},  KappaPair{-1, 0},
          KappaPair{1, -1}, KappaPair{0, -1}, KappaPair{-1, -1}};
}

inline ckgeom::KappaPair random_kp(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return ckgeom::KappaPair{u(rng), u(rng)};
}

// A random interior point, comfortably inside every chart domain of the
// given space.
inline ckgeom::ChartPoint random_point(const ckgeom::KappaPair& kp,
                                       ckgeom::Chart chart,
                                       std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double k1 = kp.k1, k12 = kp.k12();
  auto cap = [](double k, double frac) {
    return k > 0 ? frac * M_PI / (2.0 * std::sqrt(k)) : 0.7;
  };
  ckgeom::ChartPoint p;
  p.chart = chart;
  switch (chart) {
    case ckgeom::Chart::ParallelI:
      p.u1 = u(rng) * std::min(0.7, cap(k1, 0.8));
      p.u2 = u(rng) * std::min(0.7, cap(k12, 0.6));
      break;
    case ckgeom::Chart::ParallelII:
      p.u1 = u(rng) * std::min(0.7, cap(k1, 0.6));
      p.u2 = u(rng) * std::min(0.7, cap(k12, 0.8));
      break;
    case ckgeom::Chart::Polar:
      p.u1 = 0.15 + 0.5 * std::abs(u(rng)) *
                        std::min(1.0, cap(k1, 0.9));
      p.u2 = u(rng) * (kp.k2 > 0 ? M_PI / std::sqrt(kp.k2) * 0.9 : 1.0);
      break;
  }
  return p;
}

}  // namespace testutil
