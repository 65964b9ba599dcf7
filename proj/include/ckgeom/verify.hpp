// Seeded property-check suites shared by the command line tool and the
// acceptance battery.  Every suite is deterministic for a given seed and
// reports the worst residual seen against a pinned tolerance.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ckgeom/compact.hpp"
#include "ckgeom/conformal.hpp"
#include "ckgeom/cycles.hpp"
#include "ckgeom/motion.hpp"
#include "ckgeom/space.hpp"
#include "ckgeom/trig.hpp"

namespace ckgeom::verify {

struct CheckResult {
  std::string name;
  long trials = 0;
  double worst = 0.0;
  double tol = 0.0;
  bool pass() const { return worst <= tol; }
};

namespace detail {

// Generic matrix exponential (scaling and squaring on the Taylor series),
// kept independent of the closed forms it is used to cross-check.
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

inline std::vector<KappaPair> nine_spaces() {
  return {KappaPair{1, 1},  KappaPair{0, 1},  KappaPair{-1, 1},
          KappaPair{1, 0},  KappaPair{0, 0},  KappaPair{-1, 0},
          KappaPair{1, -1}, KappaPair{0, -1}, KappaPair{-1, -1}};
}

inline KappaPair random_kp(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return KappaPair{u(rng), u(rng)};
}

inline ChartPoint random_point(const KappaPair& kp, Chart chart,
                               std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double k1 = kp.k1, k12 = kp.k12();
  auto cap = [](double k, double frac) {
    return k > 0 ? frac * M_PI / (2.0 * std::sqrt(k)) : 0.7;
  };
  ChartPoint p;
  p.chart = chart;
  switch (chart) {
    case Chart::ParallelI:
      p.u1 = u(rng) * std::min(0.7, cap(k1, 0.8));
      p.u2 = u(rng) * std::min(0.7, cap(k12, 0.6));
      break;
    case Chart::ParallelII:
      p.u1 = u(rng) * std::min(0.7, cap(k1, 0.6));
      p.u2 = u(rng) * std::min(0.7, cap(k12, 0.8));
      break;
    case Chart::Polar:
      p.u1 = 0.15 + 0.5 * std::abs(u(rng)) * std::min(1.0, cap(k1, 0.9));
      p.u2 = u(rng) * (kp.k2 > 0 ? M_PI / std::sqrt(kp.k2) * 0.9 : 1.0);
      break;
  }
  return p;
}

inline Cycle fit_cycle(const std::vector<WeierstrassPoint>& pts) {
  Eigen::MatrixXd A(pts.size(), 4);
  for (size_t i = 0; i < pts.size(); ++i)
    A.row(i) << pts[i](0), pts[i](1), pts[i](2), -1.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  Cycle cy;
  cy.c = svd.matrixV().col(3);
  return cy;
}

inline double fit_residual(const std::vector<WeierstrassPoint>& pts) {
  const Cycle cy = fit_cycle(pts);
  double worst = 0.0;
  for (const auto& w : pts)
    worst = std::max(worst, std::abs(cy.c(0) * w(0) + cy.c(1) * w(1) +
                                     cy.c(2) * w(2) - cy.c(3)));
  return worst;
}

}  // namespace detail

// --------------------------------------------------------------------------
// 1. Structure constants: matrix realizations exactly, vector fields by
//    finite differences.

inline std::vector<CheckResult> suite_structure(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;

  {
    CheckResult r{"motion-matrix-brackets", 0, 0.0, 1e-12};
    auto pairs = detail::nine_spaces();
    for (int i = 0; i < 100; ++i) pairs.push_back(detail::random_kp(rng));
    for (const auto& kp : pairs) {
      const Eigen::Matrix3d P1 = generator_matrix(kp, MotionGen::P1);
      const Eigen::Matrix3d P2 = generator_matrix(kp, MotionGen::P2);
      const Eigen::Matrix3d J = generator_matrix(kp, MotionGen::J12);
      const Eigen::Matrix3d r1 = J * P1 - P1 * J - P2;
      const Eigen::Matrix3d r2 = J * P2 - P2 * J + kp.k2 * P1;
      const Eigen::Matrix3d r3 = P1 * P2 - P2 * P1 - kp.k1 * J;
      ++r.trials;
      r.worst = std::max({r.worst, r1.cwiseAbs().maxCoeff(),
                          r2.cwiseAbs().maxCoeff(), r3.cwiseAbs().maxCoeff()});
    }
    out.push_back(r);
  }

  {
    CheckResult r{"conformal-matrix-brackets", 0, 0.0, 1e-12};
    auto pairs = detail::nine_spaces();
    for (int i = 0; i < 100; ++i) pairs.push_back(detail::random_kp(rng));
    std::uniform_real_distribution<double> ue(0.6, 1.4);
    for (const auto& kp : pairs) {
      const double ell = ue(rng);
      const auto gens = basis_generators(ConfBasis::PG);
      std::array<Eigen::Matrix4d, 6> X;
      for (int i = 0; i < 6; ++i)
        X[i] = conf_generator_matrix(kp, ell, gens[i]);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
          Eigen::Matrix4d res = X[i] * X[j] - X[j] * X[i];
          const auto c = bracket_coeffs(kp, ConfBasis::PG, i, j);
          for (int k = 0; k < 6; ++k) res -= c[k] * X[k];
          r.worst = std::max(r.worst, res.cwiseAbs().maxCoeff());
        }
      ++r.trials;
    }
    out.push_back(r);
  }

  {
    CheckResult r{"conformal-matrix-brackets-1d", 0, 0.0, 1e-12};
    std::uniform_real_distribution<double> uk(-2.0, 2.0), ue(0.6, 1.4);
    for (int i = 0; i < 100; ++i) {
      const double k1 = uk(rng), ell = ue(rng);
      const Eigen::Matrix3d P = conf_generator_matrix_1d(k1, ell, ConfGen::P1);
      const Eigen::Matrix3d G = conf_generator_matrix_1d(k1, ell, ConfGen::G1);
      const Eigen::Matrix3d D = conf_generator_matrix_1d(k1, ell, ConfGen::D);
      const Eigen::Matrix3d r1 = D * P - P * D - (P + k1 * G);
      const Eigen::Matrix3d r2 = D * G - G * D + G;
      const Eigen::Matrix3d r3 = P * G - G * P - D;
      ++r.trials;
      r.worst = std::max({r.worst, r1.cwiseAbs().maxCoeff(),
                          r2.cwiseAbs().maxCoeff(), r3.cwiseAbs().maxCoeff()});
    }
    out.push_back(r);
  }

  {
    CheckResult r{"conformal-field-brackets", 0, 0.0, 1e-5};
    for (const auto& kp : detail::nine_spaces()) {
      for (int i = 0; i < 50; ++i) {
        const Chart ch = i % 2 ? Chart::ParallelI : Chart::Polar;
        const ChartPoint p = detail::random_point(kp, ch, rng);
        const ConfBasis b = static_cast<ConfBasis>(i % 3);
        r.worst = std::max(r.worst, bracket_check(kp, b, p));
        ++r.trials;
      }
    }
    out.push_back(r);
  }
  return out;
}

// --------------------------------------------------------------------------
// 2. Invariance of the ambient forms under random group words.

inline std::vector<CheckResult> suite_invariance(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  std::uniform_real_distribution<double> up(-1.0, 1.0);
  std::uniform_int_distribution<int> um(0, 2), uc(0, 5);

  {
    CheckResult r{"motion-word-preserves-form", 0, 0.0, 1e-9};
    for (int t = 0; t < 5000; ++t) {
      const KappaPair kp = detail::random_kp(rng);
      Eigen::Matrix3d g = Eigen::Matrix3d::Identity();
      for (int i = 0; i < 10; ++i)
        g = g * one_param(kp, static_cast<MotionGen>(um(rng)), 0.6 * up(rng));
      r.worst = std::max(r.worst, isometry_defect(kp, g));
      ++r.trials;
    }
    out.push_back(r);
  }

  {
    CheckResult r{"conformal-word-preserves-cone-form", 0, 0.0, 1e-9};
    const std::array<ConfGen, 6> letters = {ConfGen::P1, ConfGen::P2,
                                            ConfGen::J12, ConfGen::D,
                                            ConfGen::G1,  ConfGen::G2};
    for (int t = 0; t < 5000; ++t) {
      const KappaPair kp = detail::random_kp(rng);
      const double ell = 0.9;
      const Eigen::Matrix4d U = upsilon(kp);
      Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
      for (int i = 0; i < 10; ++i)
        g = g * conf_subgroup(kp, ell, letters[uc(rng)], 0.6 * up(rng));
      r.worst = std::max(
          r.worst, (g.transpose() * U * g - U).cwiseAbs().maxCoeff());
      ++r.trials;
    }
    out.push_back(r);
  }
  return out;
}

// --------------------------------------------------------------------------
// 3. Closed-form one-parameter subgroups against the exponential oracle.

inline std::vector<CheckResult> suite_expm(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  std::uniform_real_distribution<double> up(-1.2, 1.2), ue(0.6, 1.4);
  std::uniform_int_distribution<int> um(0, 2), uc(0, 5);

  {
    CheckResult r{"motion-subgroups-vs-expm", 0, 0.0, 1e-9};
    for (int t = 0; t < 1000; ++t) {
      const KappaPair kp = detail::random_kp(rng);
      const MotionGen g = static_cast<MotionGen>(um(rng));
      const double par = up(rng);
      const Eigen::Matrix3d E =
          detail::expm<Eigen::Matrix3d>(par * generator_matrix(kp, g));
      r.worst = std::max(
          r.worst, (E - one_param(kp, g, par)).cwiseAbs().maxCoeff());
      ++r.trials;
    }
    out.push_back(r);
  }

  {
    CheckResult r{"conformal-subgroups-vs-expm", 0, 0.0, 1e-9};
    const std::array<ConfGen, 6> letters = {ConfGen::P1, ConfGen::P2,
                                            ConfGen::J12, ConfGen::D,
                                            ConfGen::G1,  ConfGen::G2};
    for (int t = 0; t < 1000; ++t) {
      const KappaPair kp = detail::random_kp(rng);
      const double ell = ue(rng), par = up(rng);
      const ConfGen g = letters[uc(rng)];
      const Eigen::Matrix4d E =
          detail::expm<Eigen::Matrix4d>(par * conf_generator_matrix(kp, ell, g));
      r.worst = std::max(
          r.worst, (E - conf_subgroup(kp, ell, g, par)).cwiseAbs().maxCoeff());
      ++r.trials;
    }
    out.push_back(r);
  }

  {
    CheckResult r{"conformal-subgroups-1d-vs-expm", 0, 0.0, 1e-9};
    const std::array<ConfGen, 3> letters = {ConfGen::P1, ConfGen::G1,
                                            ConfGen::D};
    std::uniform_real_distribution<double> uk(-2.0, 2.0);
    for (int t = 0; t < 1000; ++t) {
      const double k1 = uk(rng), ell = ue(rng), par = up(rng);
      const ConfGen g = letters[t % 3];
      const Eigen::Matrix3d E = detail::expm<Eigen::Matrix3d>(
          par * conf_generator_matrix_1d(k1, ell, g));
      r.worst = std::max(
          r.worst,
          (E - conf_subgroup_1d(k1, ell, g, par)).cwiseAbs().maxCoeff());
      ++r.trials;
    }
    out.push_back(r);
  }
  return out;
}

// --------------------------------------------------------------------------
// 4. Geodesic curvature: numeric pipeline against the closed form, plus the
//    exact circle and equidistant specializations.

inline std::vector<CheckResult> suite_curvature(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  std::uniform_real_distribution<double> uc(-0.3, 0.3), ur(0.25, 0.6);

  {
    CheckResult r{"kg-numeric-vs-closed-form", 0, 0.0, 1e-6};
    const std::vector<KappaPair> six = {KappaPair{1, 1},  KappaPair{0, 1},
                                        KappaPair{-1, 1}, KappaPair{1, -1},
                                        KappaPair{0, -1}, KappaPair{-1, -1}};
    size_t which = 0;
    while (r.trials < 200) {
      const KappaPair kp = six[which++ % six.size()];
      const ChartPoint c{Chart::ParallelI, uc(rng), uc(rng)};
      const double rho = std::min(ur(rng), kp.k1 > 0 ? 0.5 : 1.0);
      Cycle cy;
      try {
        cy = circle(kp, c, rho);
      } catch (const Error&) {
        continue;
      }
      const auto pts = sample_cycle(cy, kp, 24);
      const double kg = geodesic_curvature(kp, cy);
      for (const auto& p : pts) {
        if (tangent_conditioning(kp, cy, p) < 0.2) continue;
        try {
          r.worst = std::max(r.worst, std::abs(kg_numeric(kp, cy, p) - kg));
          ++r.trials;
        } catch (const Error&) {
        }
        break;  // one well-conditioned point per cycle
      }
    }
    out.push_back(r);
  }

  {
    CheckResult r{"kg-circle-equidistant-closed-forms", 0, 0.0, 1e-12};
    std::uniform_real_distribution<double> ub(-0.4, 0.4), ud(0.15, 0.5);
    const std::vector<KappaPair> six = {KappaPair{1, 1},  KappaPair{0, 1},
                                        KappaPair{-1, 1}, KappaPair{1, -1},
                                        KappaPair{0, -1}, KappaPair{-1, -1}};
    for (const auto& kp : six) {
      for (int t = 0; t < 20; ++t) {
        const double rho = ur(rng);
        const ChartPoint c{Chart::ParallelI, uc(rng), uc(rng)};
        const Cycle cy = circle(kp, c, rho);
        const double want =
            kp.k1 == 0.0 ? 1.0 / rho : std::abs(1.0 / tk(kp.k1, rho));
        r.worst = std::max(
            r.worst, std::abs(geodesic_curvature(kp, cy) - want) /
                         std::max(1.0, want));
        ++r.trials;
        if (kp.k2 != 0.0 && kp.k1 != 0.0) {
          const double d = ud(rng);
          try {
            const Cycle eq = equidistant(kp, ub(rng), ub(rng), d);
            const double wq = std::abs(kp.k1 * tk(kp.k1, d));
            r.worst = std::max(r.worst,
                               std::abs(geodesic_curvature(kp, eq) - wq) /
                                   std::max(1.0, wq));
            ++r.trials;
          } catch (const Error&) {
          }
        }
      }
    }
    out.push_back(r);
  }
  return out;
}

// --------------------------------------------------------------------------
// 5. Power of a point: ray independence and the coefficient formula.

inline std::vector<CheckResult> suite_power(uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult r{"power-of-origin", 0, 0.0, 1e-9};
  std::uniform_real_distribution<double> uc(-0.3, 0.3), ur(0.25, 0.55),
      uphi(-0.8, 0.8);
  const std::vector<KappaPair> six = {KappaPair{1, 1},  KappaPair{-1, 1},
                                      KappaPair{1, 0},  KappaPair{-1, 0},
                                      KappaPair{1, -1}, KappaPair{-1, -1}};
  for (const auto& kp : six) {
    int done = 0;
    while (done < 50) {
      const ChartPoint c{Chart::ParallelI, uc(rng), uc(rng)};
      const double rho = std::min(ur(rng), kp.k1 > 0 ? 0.5 : 1.0);
      Cycle cy;
      double want;
      try {
        cy = circle(kp, c, rho);
        want = power_of_origin(kp, cy);
      } catch (const Error&) {
        continue;
      }
      int rays = 0;
      for (int j = 0; j < 12 && rays < 3; ++j) {
        const double phi = uphi(rng) * (kp.k2 > 0 ? M_PI : 1.0);
        const auto roots = radii_on_ray(cy, kp, phi);
        if (roots.size() != 2) continue;
        const double prod = tk(kp.k1, roots[0] / 2) * tk(kp.k1, roots[1] / 2);
        r.worst = std::max(r.worst, std::abs(prod - want));
        ++rays;
      }
      if (rays == 0) continue;
      ++done;
      ++r.trials;
    }
  }
  return {r};
}

// --------------------------------------------------------------------------
// 6. The integral-of-the-secant function: transfer and derivative identities.

inline std::vector<CheckResult> suite_lambda(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  std::uniform_real_distribution<double> uk(-2.0, 2.0), ux(-1.0, 1.0);

  CheckResult ri{"lambda-transfer-identities", 0, 0.0, 1e-10};
  CheckResult rd{"lambda-derivative", 0, 0.0, 1e-6};
  for (int t = 0; t < 10000; ++t) {
    const double k = uk(rng);
    double x = ux(rng);
    if (k > 0) x *= 0.9 * M_PI / (2.0 * std::sqrt(k));
    const double L = lambda_fn(k, x);
    ri.worst = std::max(ri.worst, std::abs(lambda_fn(-k, L) - x));
    ri.worst = std::max(ri.worst, std::abs(ck(-k, L) - 1.0 / ck(k, x)));
    ri.worst = std::max(ri.worst, std::abs(sk(-k, L) - tk(k, x)));
    ri.worst = std::max(ri.worst, std::abs(tk(-k, L) - sk(k, x)));
    ri.worst = std::max(ri.worst,
                        std::abs(tk(-k, L / 2.0) - tk(k, x / 2.0)));
    ++ri.trials;
    if (t % 10 == 0) {
      const double h = 1e-6 * std::max(1.0, std::abs(x));
      if (!(k > 0) ||
          std::abs(x) + h < 0.98 * M_PI / (2.0 * std::sqrt(k))) {
        const double fd =
            (lambda_fn(k, x + h) - lambda_fn(k, x - h)) / (2.0 * h);
        rd.worst = std::max(rd.worst, std::abs(fd - 1.0 / ck(k, x)));
        ++rd.trials;
      }
    }
  }
  out.push_back(ri);
  out.push_back(rd);
  return out;
}

// --------------------------------------------------------------------------
// 7. Conformal Killing property of the ten generators.

inline std::vector<CheckResult> suite_killing(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  const std::array<ConfGen, 10> gens = {
      ConfGen::P1, ConfGen::P2, ConfGen::J12, ConfGen::D, ConfGen::L1,
      ConfGen::L2, ConfGen::G1, ConfGen::G2,  ConfGen::R1, ConfGen::R2};

  CheckResult r{"conformal-killing-residual", 0, 0.0, 1e-5};
  for (const auto& kp : detail::nine_spaces()) {
    for (int i = 0; i < 50; ++i) {
      const Chart ch = static_cast<Chart>(i % 3);
      const ChartPoint p = detail::random_point(kp, ch, rng);
      for (ConfGen g : gens) {
        try {
          r.worst = std::max(r.worst, lie_derivative_check(kp, g, p));
          ++r.trials;
        } catch (const PoleError&) {
        }
      }
    }
  }
  out.push_back(r);

  CheckResult rs{"killing-factor-special-values", 0, 0.0, 1e-12};
  for (const auto& kp : detail::nine_spaces()) {
    const ChartPoint p = detail::random_point(kp, Chart::ParallelI, rng);
    // isometry generators have a vanishing factor
    for (ConfGen g : {ConfGen::P1, ConfGen::P2, ConfGen::J12})
      rs.worst = std::max(rs.worst, std::abs(conformal_factor(kp, g, p)));
    // dilations: minus twice the ambient height, leafwise at kappa2 = 0
    const double muD =
        kp.k2 == 0.0 ? conformal_factor_subsidiary(kp, ConfGen::D, p)
                     : conformal_factor(kp, ConfGen::D, p);
    const double want = kp.k2 == 0.0 ? -2.0 * ck(kp.k1, p.u1)
                                     : -2.0 * to_weierstrass(kp, p)(0);
    rs.worst = std::max(rs.worst, std::abs(muD - want));
    ++rs.trials;
  }
  out.push_back(rs);
  return out;
}

// --------------------------------------------------------------------------
// 8. Symmetries of the Laplace/wave operator.

inline std::vector<CheckResult> suite_laplace(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  const std::array<ConfGen, 10> gens = {
      ConfGen::P1, ConfGen::P2, ConfGen::J12, ConfGen::D, ConfGen::L1,
      ConfGen::L2, ConfGen::G1, ConfGen::G2,  ConfGen::R1, ConfGen::R2};
  const std::vector<Fn2> library = {
      [](double u, double v) { return std::sin(1.1 * u) * std::exp(0.7 * v); },
      [](double u, double v) { return u * u * v + 0.5 * v * v * v; },
      [](double u, double v) { return std::cos(u + 0.4 * v); }};

  CheckResult r{"laplace-symmetry-commutators", 0, 0.0, 1e-4};
  for (const auto& kp : detail::nine_spaces()) {
    for (ConfGen g : gens) {
      for (int i = 0; i < 20; ++i) {
        const ChartPoint p = detail::random_point(kp, Chart::ParallelI, rng);
        const Fn2& f = library[i % library.size()];
        r.worst = std::max(r.worst, symmetry_commutator_check(kp, g, f, p));
        ++r.trials;
      }
    }
  }
  out.push_back(r);

  CheckResult rc{"laplace-coefficient-spot-values", 0, 0.0, 1e-14};
  {
    const LaplaceCoeffs e = laplace_operator(the_nine("E2"),
                                             {Chart::ParallelI, 0.3, 0.4});
    rc.worst = std::max({rc.worst, std::abs(e.a11 - 1.0), std::abs(e.a22 - 1.0),
                         std::abs(e.b1), std::abs(e.b2)});
    const double rr = 0.7;
    const LaplaceCoeffs s = laplace_operator(the_nine("S2"),
                                             {Chart::Polar, rr, 0.1});
    rc.worst = std::max(
        {rc.worst, std::abs(s.a11 - 1.0),
         std::abs(s.a22 - 1.0 / std::pow(std::sin(rr), 2)),
         std::abs(s.b1 - 1.0 / std::tan(rr))});
    const LaplaceCoeffs m = laplace_operator(the_nine("M"),
                                             {Chart::ParallelI, 0.2, 0.3});
    rc.worst = std::max({rc.worst, std::abs(m.a11 + 1.0), std::abs(m.a22 - 1.0)});
    const LaplaceCoeffs h = laplace_operator(the_nine("H2"),
                                             {Chart::ParallelII, 0.5, 0.2});
    rc.worst = std::max(
        {rc.worst, std::abs(h.a11 - 1.0),
         std::abs(h.a22 - 1.0 / std::pow(std::cosh(0.5), 2)),
         std::abs(h.b1 - std::tanh(0.5))});
    rc.trials = 4;
  }
  out.push_back(rc);
  return out;
}

// --------------------------------------------------------------------------
// 9. Compactification: coverage census and embedding spot values.

inline std::vector<CheckResult> suite_compact(int grid = 200) {
  std::vector<CheckResult> out;

  auto fact = [&out](const std::string& name, bool ok) {
    out.push_back({name, 1, ok ? 0.0 : 1.0, 0.5});
  };

  const CensusResult s2 = completion_census(the_nine("S2"), 1.0, grid);
  fact("census-sphere-full-cover",
       s2.min_splus < -0.999 && s2.min_pole_gap < 0.08);

  const CensusResult e2a = completion_census(the_nine("E2"), 1.0, grid / 2);
  const CensusResult e2b = completion_census(the_nine("E2"), 1.0, grid);
  const double missa = 0.5 * (1.0 + e2a.min_splus);
  const double missb = 0.5 * (1.0 + e2b.min_splus);
  fact("census-euclidean-missing-pole-cap",
       e2b.min_splus > -1.0 && missb < missa && missb < 2e-3 &&
           e2b.min_pole_gap > 0.0 && e2b.min_pole_gap < 0.1);

  const CensusResult h2 = completion_census(the_nine("H2"), 1.0, grid);
  fact("census-hyperbolic-upper-cap", h2.min_splus > -1e-12);

  const CensusResult mk = completion_census(the_nine("M"), 1.0, grid);
  fact("census-minkowski-infinity-lines",
       mk.min_slice_gap > 0.0 && mk.min_slice_gap < 1e-2 &&
           mk.min_splus < -10.0 && mk.max_splus > 10.0 &&
           infinity_locus_check(the_nine("M"), 1.0, grid) < 1e-9);

  const CensusResult ds = completion_census(the_nine("dS"), 1.0, grid);
  fact("census-de-sitter-unbounded-ends",
       ds.embedded > 0.9 * ds.attempted && ds.min_splus < -10.0 &&
           ds.max_splus > 10.0);

  for (const char* name : {"AdS", "NH+", "G", "NH-"}) {
    const CensusResult c = completion_census(the_nine(name), 1.0, grid);
    fact(std::string("census-clean-embedding-") + name,
         c.embedded > 0.9 * c.attempted);
  }

  // embedding spot values at unit scale
  CheckResult sv{"embedding-spot-values", 0, 0.0, 1e-12};
  {
    const double a = 0.4, y = 0.3;
    // sphere: the embedding is the identity on Weierstrass coordinates
    {
      const Eigen::Vector3d st = stereographic(
          the_nine("S2"), 1.0,
          to_weierstrass(the_nine("S2"), {Chart::ParallelI, a, y}));
      sv.worst = std::max(
          sv.worst, (st - Eigen::Vector3d(std::cos(a) * std::cos(y),
                                          std::sin(a) * std::cos(y),
                                          std::sin(y)))
                        .cwiseAbs()
                        .maxCoeff());
    }
    // euclidean plane
    {
      const Eigen::Vector3d st = stereographic(
          the_nine("E2"), 1.0,
          to_weierstrass(the_nine("E2"), {Chart::ParallelI, a, y}));
      const double q = a * a + y * y;
      sv.worst = std::max(
          sv.worst, (st - Eigen::Vector3d((4.0 - q) / (4.0 + q),
                                          4.0 * a / (4.0 + q),
                                          4.0 * y / (4.0 + q)))
                        .cwiseAbs()
                        .maxCoeff());
    }
    // hyperbolic plane: first section coordinate depends on a alone
    {
      const Eigen::Vector3d st = stereographic(
          the_nine("H2"), 1.0,
          to_weierstrass(the_nine("H2"), {Chart::ParallelI, a, y}));
      sv.worst = std::max(
          sv.worst,
          std::abs(st(0) - 1.0 / (std::cosh(a) * std::cosh(y))));
      sv.worst = std::max(sv.worst, std::abs(st(1) - std::tanh(a)));
    }
    // anti-de sitter: the transversal coordinate is untouched at unit scale
    {
      const KappaPair ads = the_nine("AdS");
      const Eigen::Vector3d st = stereographic(
          ads, 1.0, to_weierstrass(ads, {Chart::ParallelI, a, y}));
      const ChartPoint cc = compact_chart(ads, Chart::ParallelI, st);
      sv.worst = std::max(sv.worst,
                          std::abs(std::sinh(cc.u2) - std::sinh(y)));
    }
    // minkowski: sinh Y = y / (1 + (a^2 - y^2)/4) at unit scale
    {
      const KappaPair mkv = the_nine("M");
      const Eigen::Vector3d st = stereographic(
          mkv, 1.0, to_weierstrass(mkv, {Chart::ParallelI, a, y}));
      const ChartPoint cc = compact_chart(mkv, Chart::ParallelI, st);
      sv.worst = std::max(
          sv.worst, std::abs(std::sinh(cc.u2) -
                             y / (1.0 + 0.25 * (a * a - y * y))));
    }
    sv.trials = 5;
  }
  out.push_back(sv);
  return out;
}

// --------------------------------------------------------------------------
// 10. Cycle preservation under the conformal flows.

inline std::vector<CheckResult> suite_cycle_preservation(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  std::uniform_real_distribution<double> uc(-0.3, 0.3), ur(0.25, 0.55),
      uu(-0.5, 0.5);

  CheckResult rf{"conformal-flows-preserve-cycles", 0, 0.0, 1e-8};
  CheckResult rv{"inversions-involutive", 0, 0.0, 1e-10};
  CheckResult rc{"inversion-composition-parameter", 0, 0.0, 1e-8};
  for (const char* name : {"S2", "H2", "AdS", "dS", "E2", "M"}) {
    const KappaPair kp = the_nine(name);
    int done = 0;
    for (int attempt = 0; attempt < 400 && done < 12; ++attempt) {
      const ChartPoint c{Chart::ParallelI, uc(rng), uc(rng)};
      const double rho = std::min(ur(rng), kp.k1 > 0 ? 0.5 : 1.0);
      Cycle cy;
      try {
        cy = circle(kp, c, rho);
      } catch (const Error&) {
        continue;
      }
      const auto pts = sample_cycle(cy, kp, 10);
      if (pts.size() < 6) continue;
      // each flow family is fitted independently: a flow may push single
      // sample points out of its branch domain
      double p0 = 0.25;
      try {
        const double pw = power_of_origin(kp, cy);
        if (pw > 0.01) p0 = pw;
      } catch (const Error&) {
      }
      std::vector<WeierstrassPoint> dil, inv, inveq, lam;
      for (const auto& p : pts) {
        try {
          dil.push_back(to_weierstrass(kp, dilation_flow(kp, 0.3, p)));
        } catch (const Error&) {
        }
        try {
          inv.push_back(to_weierstrass(kp, inversion_circle(kp, p0, p)));
        } catch (const Error&) {
        }
        try {
          const ChartPoint p2 = convert(kp, p, Chart::ParallelII);
          inveq.push_back(
              to_weierstrass(kp, inversion_equidistant(kp, 0.2, p2)));
        } catch (const Error&) {
        }
        try {
          const ChartPoint p1 = convert(kp, p, Chart::ParallelI);
          lam.push_back(
              to_weierstrass(kp, lambda_translation_flow(kp, 2, 0.3, p1)));
        } catch (const Error&) {
        }
      }
      bool counted = false;
      for (const auto* fam : {&dil, &inv, &inveq, &lam}) {
        if (fam->size() < 6) continue;
        rf.worst = std::max(rf.worst, detail::fit_residual(*fam));
        ++rf.trials;
        counted = true;
      }
      if (counted) ++done;
    }

    // involution and composition on random points
    for (int t = 0; t < 20; ++t) {
      const ChartPoint s =
          detail::random_point(kp, Chart::ParallelII, rng);
      const double u1 = 0.6 * uu(rng), u2 = 0.6 * uu(rng);
      try {
        const ChartPoint q = inversion_equidistant(kp, u1, s);
        const ChartPoint back = inversion_equidistant(kp, u1, q);
        rv.worst = std::max({rv.worst, std::abs(back.u1 - s.u1),
                             std::abs(back.u2 - s.u2)});
        ++rv.trials;
        const ChartPoint twice = inversion_equidistant(kp, u2, q);
        const double w = (u2 - u1) / (1.0 - kp.k1 * u1 * u2);
        const double zeta = 2.0 * arc_tk(-kp.k1, w);
        const ChartPoint expect = lambda_translation_flow(kp, 1, zeta, s);
        rc.worst = std::max({rc.worst, std::abs(twice.u1 - expect.u1),
                             std::abs(twice.u2 - expect.u2)});
        ++rc.trials;
      } catch (const Error&) {
      }
      const ChartPoint p = detail::random_point(kp, Chart::Polar, rng);
      try {
        const ChartPoint q = inversion_circle(kp, 0.3, p);
        const ChartPoint back = inversion_circle(kp, 0.3, q);
        rv.worst = std::max({rv.worst, std::abs(back.u1 - p.u1),
                             std::abs(back.u2 - p.u2)});
        ++rv.trials;
      } catch (const Error&) {
      }
    }
  }
  out.push_back(rf);
  out.push_back(rv);
  out.push_back(rc);
  return out;
}

// --------------------------------------------------------------------------
// 11. Contraction continuity at |kappa| = 1e-9 against the flat forms.

inline std::vector<CheckResult> suite_contraction(uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult r{"contraction-continuity", 0, 0.0, 1e-6};
  std::uniform_real_distribution<double> ux(-1.2, 1.2);
  const double eps = 1e-9;

  for (int t = 0; t < 2000; ++t) {
    const double x = ux(rng);
    for (double k : {eps, -eps}) {
      r.worst = std::max(r.worst, std::abs(ck(k, x) - ck(0.0, x)));
      r.worst = std::max(r.worst, std::abs(sk(k, x) - x));
      r.worst = std::max(r.worst, std::abs(vk(k, x) - 0.5 * x * x));
      r.worst = std::max(r.worst, std::abs(tk(k, x) - x));
      r.worst = std::max(r.worst, std::abs(lambda_fn(k, x) - x));
    }
    ++r.trials;
  }

  const std::array<ConfGen, 10> gens = {
      ConfGen::P1, ConfGen::P2, ConfGen::J12, ConfGen::D, ConfGen::L1,
      ConfGen::L2, ConfGen::G1, ConfGen::G2,  ConfGen::R1, ConfGen::R2};
  for (double k2 : {1.0, 0.0, -1.0}) {
    for (double k1 : {eps, -eps}) {
      const KappaPair ka(k1, k2), k0(0.0, k2);
      for (int i = 0; i < 25; ++i) {
        const Chart ch = static_cast<Chart>(i % 3);
        const ChartPoint p = detail::random_point(k0, ch, rng);
        const MetricAtPoint ga = metric_at(ka, p), g0 = metric_at(k0, p);
        r.worst = std::max({r.worst, std::abs(ga.g11 - g0.g11),
                            std::abs(ga.g12 - g0.g12),
                            std::abs(ga.g22 - g0.g22)});
        for (ConfGen g : gens) {
          const Eigen::Vector2d d =
              conf_field(ka, g, p) - conf_field(k0, g, p);
          r.worst = std::max(r.worst, d.cwiseAbs().maxCoeff());
        }
        const Eigen::Vector3d sa =
            stereographic(ka, 1.0, to_weierstrass(ka, p));
        const Eigen::Vector3d s0 =
            stereographic(k0, 1.0, to_weierstrass(k0, p));
        r.worst = std::max(r.worst, (sa - s0).cwiseAbs().maxCoeff());
        ++r.trials;
      }
      // curvature of a concrete circle across the flat limit
      const Cycle ca = circle(ka, {Chart::ParallelI, 0.2, 0.1}, 0.4);
      const Cycle c0 = circle(k0, {Chart::ParallelI, 0.2, 0.1}, 0.4);
      r.worst = std::max(r.worst, std::abs(geodesic_curvature(ka, ca) -
                                           geodesic_curvature(k0, c0)));
    }
  }
  return {r};
}

// --------------------------------------------------------------------------

inline std::vector<CheckResult> run_suite(const std::string& name,
                                          uint64_t seed) {
  if (name == "structure") return suite_structure(seed);
  if (name == "invariance") return suite_invariance(seed);
  if (name == "expm") return suite_expm(seed);
  if (name == "curvature") return suite_curvature(seed);
  if (name == "power") return suite_power(seed);
  if (name == "lambda") return suite_lambda(seed);
  if (name == "killing") return suite_killing(seed);
  if (name == "laplace") return suite_laplace(seed);
  if (name == "compact") return suite_compact();
  if (name == "cycles") return suite_cycle_preservation(seed);
  if (name == "contraction") return suite_contraction(seed);
  throw DomainError("unknown verification suite: " + name);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "structure", "invariance", "expm",    "curvature", "power",  "lambda",
      "killing",   "laplace",    "compact", "cycles",    "contraction"};
  return names;
}

inline std::vector<CheckResult> run_all(uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& n : suite_names()) {
    auto part = run_suite(n, seed);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace ckgeom::verify
