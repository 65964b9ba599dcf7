#pragma once

#include <cmath>
#include <functional>

// Central finite differences with one Richardson extrapolation step,
// relative step sizes.

namespace ckgeom {

using Fn2 = std::function<double(double, double)>;

inline double fd_step(double x, double h) {
  return h * std::max(1.0, std::abs(x));
}

inline double fd_partial(const Fn2& f, double u, double v, int dir,
                         double h = 1e-4) {
  auto d = [&](double hh) {
    if (dir == 0) return (f(u + hh, v) - f(u - hh, v)) / (2.0 * hh);
    return (f(u, v + hh) - f(u, v - hh)) / (2.0 * hh);
  };
  const double hh = fd_step(dir == 0 ? u : v, h);
  const double d1 = d(hh), d2 = d(hh / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

inline double fd_second(const Fn2& f, double u, double v, int i, int j,
                        double h = 1e-4) {
  if (i == j) {
    auto d = [&](double hh) {
      if (i == 0)
        return (f(u + hh, v) - 2.0 * f(u, v) + f(u - hh, v)) / (hh * hh);
      return (f(u, v + hh) - 2.0 * f(u, v) + f(u, v - hh)) / (hh * hh);
    };
    const double hh = fd_step(i == 0 ? u : v, h);
    const double d1 = d(hh), d2 = d(hh / 2.0);
    return (4.0 * d2 - d1) / 3.0;
  }
  auto d = [&](double hu, double hv) {
    return (f(u + hu, v + hv) - f(u + hu, v - hv) - f(u - hu, v + hv) +
            f(u - hu, v - hv)) /
           (4.0 * hu * hv);
  };
  const double hu = fd_step(u, h), hv = fd_step(v, h);
  const double d1 = d(hu, hv), d2 = d(hu / 2.0, hv / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace ckgeom
