#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "ckgeom/errors.hpp"
#include "ckgeom/numeric.hpp"
#include "ckgeom/space.hpp"
#include "ckgeom/trig.hpp"

// The cycle-preserving (conformal) algebra of a space: vector fields of all
// ten named generators in every chart, the finite flows along the
// distinguished directions (Lambda-translations, dilations, inversions),
// bracket tables in three bases, conformal Killing factors, and the
// Laplace/wave operator with its conformal symmetries.

namespace ckgeom {

enum class ConfGen { P1, P2, J12, D, L1, L2, G1, G2, R1, R2 };

inline const char* conf_gen_name(ConfGen g) {
  switch (g) {
    case ConfGen::P1: return "P1";
    case ConfGen::P2: return "P2";
    case ConfGen::J12: return "J12";
    case ConfGen::D: return "D";
    case ConfGen::L1: return "L1";
    case ConfGen::L2: return "L2";
    case ConfGen::G1: return "G1";
    case ConfGen::G2: return "G2";
    case ConfGen::R1: return "R1";
    case ConfGen::R2: return "R2";
  }
  return "?";
}

// Vector field of a generator at a chart point, components in the chart
// coordinates.
inline Eigen::Vector2d conf_field(const KappaPair& kp, ConfGen gen,
                                  const ChartPoint& p) {
  validate_chart_point(kp, p);
  const double k1 = kp.k1, k2 = kp.k2, k12 = kp.k12();
  Eigen::Vector2d v;
  switch (p.chart) {
    case Chart::ParallelI: {
      const double a = p.u1, y = p.u2;
      const double Ca = ck(k1, a), Sa = sk(k1, a), Va = vk(k1, a);
      const double Cy = ck(k12, y), Sy = sk(k12, y), Ty = tk(k12, y);
      const double Vy = vk(k12, y);
      switch (gen) {
        case ConfGen::P1: v << -1.0, 0.0; break;
        case ConfGen::P2: v << -k12 * Sa * Ty, -Ca; break;
        case ConfGen::J12: v << k2 * Ca * Ty, -Sa; break;
        case ConfGen::D: v << -Sa / Cy, -Ca * Sy; break;
        case ConfGen::L1: v << -Ca / Cy, k1 * Sa * Sy; break;
        case ConfGen::L2: v << 0.0, -Cy; break;
        case ConfGen::G1: v << (Va - k2 * Vy) / Cy, Sa * Sy; break;
        case ConfGen::G2: v << k2 * Sa * Ty, -(Va - k2 * Vy); break;
        case ConfGen::R1:
          v << -0.5 * (1.0 + Ca / Cy), 0.5 * k1 * Sa * Sy;
          break;
        case ConfGen::R2:
          v << -0.5 * k12 * Sa * Ty, -0.5 * (Ca + Cy);
          break;
      }
      break;
    }
    case Chart::ParallelII: {
      const double x = p.u1, b = p.u2;
      const double Cx = ck(k1, x), Sx = sk(k1, x), Tx = tk(k1, x);
      const double Vx = vk(k1, x);
      const double Cb = ck(k12, b), Sb = sk(k12, b), Vb = vk(k12, b);
      switch (gen) {
        case ConfGen::P1: v << -Cb, -k1 * Tx * Sb; break;
        case ConfGen::P2: v << 0.0, -1.0; break;
        case ConfGen::J12: v << k2 * Sb, -Tx * Cb; break;
        case ConfGen::D: v << -Sx * Cb, -Sb / Cx; break;
        case ConfGen::L1: v << -Cx, 0.0; break;
        case ConfGen::L2: v << k12 * Sx * Sb, -Cb / Cx; break;
        case ConfGen::G1: v << Vx - k2 * Vb, Tx * Sb; break;
        case ConfGen::G2: v << k2 * Sx * Sb, -(Vx - k2 * Vb) / Cx; break;
        case ConfGen::R1:
          v << -0.5 * (Cx + Cb), -0.5 * k1 * Tx * Sb;
          break;
        case ConfGen::R2:
          v << 0.5 * k12 * Sx * Sb, -0.5 * (1.0 + Cb / Cx);
          break;
      }
      break;
    }
    case Chart::Polar: {
      const double r = p.u1, phi = p.u2;
      const double Cf = ck(k2, phi), Sf = sk(k2, phi);
      const double Tr = tk(k1, r), Sr = sk(k1, r), Cr = ck(k1, r);
      const double Vr = vk(k1, r);
      switch (gen) {
        case ConfGen::P1: v << -Cf, Sf / Tr; break;
        case ConfGen::P2: v << -k2 * Sf, -Cf / Tr; break;
        case ConfGen::J12: v << 0.0, -1.0; break;
        case ConfGen::D: v << -Sr, 0.0; break;
        case ConfGen::L1: v << -Cf * Cr, Sf / Sr; break;
        case ConfGen::L2: v << -k2 * Sf * Cr, -Cf / Sr; break;
        case ConfGen::G1: v << Cf * Vr, Sf * Vr / Sr; break;
        case ConfGen::G2: v << k2 * Sf * Vr, -Cf * Vr / Sr; break;
        case ConfGen::R1: {
          const double t2 = tk(k1, r / 2.0);
          if (std::abs(t2) < kPoleTol)
            throw PoleError("conf_field: R at the polar origin");
          v << -0.5 * Cf * Sr / t2, 0.5 * Sf / t2;
          break;
        }
        case ConfGen::R2: {
          const double t2 = tk(k1, r / 2.0);
          if (std::abs(t2) < kPoleTol)
            throw PoleError("conf_field: R at the polar origin");
          v << -0.5 * k2 * Sf * Sr / t2, -0.5 * Cf / t2;
          break;
        }
      }
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Finite flows.

// Lambda-translation along the second axis: y goes through the secant
// integral, shifts, and comes back.  The point is handled in parallel I
// coordinates.  axis = 1 does the same with x in parallel II.
inline ChartPoint lambda_translation_flow(const KappaPair& kp, int axis,
                                          double xi, const ChartPoint& p) {
  if (axis != 1 && axis != 2)
    throw DomainError("lambda_translation_flow: axis must be 1 or 2");
  const Chart chart = (axis == 2) ? Chart::ParallelI : Chart::ParallelII;
  const ChartPoint q = convert(kp, p, chart);
  const double label = (axis == 2) ? kp.k12() : kp.k1;
  const double coord = (axis == 2) ? q.u2 : q.u1;
  const double hat = lambda_fn(label, coord) + xi;
  double moved;
  try {
    moved = lambda_fn(-label, hat);
  } catch (const DomainError&) {
    throw BranchOverflowError(
        "lambda_translation_flow: flow leaves the principal branch");
  }
  ChartPoint out = q;
  ((axis == 2) ? out.u2 : out.u1) = moved;
  return out;
}

// Dilation in polar coordinates: tk(k1, r/2) scales by e^lambda.
inline ChartPoint dilation_flow(const KappaPair& kp, double lam,
                                const ChartPoint& p) {
  const ChartPoint q = convert(kp, p, Chart::Polar);
  const double t = tk(kp.k1, q.u1 / 2.0) * std::exp(lam);
  double r;
  try {
    r = 2.0 * arc_tk(kp.k1, t);
  } catch (const DomainError&) {
    throw RangeError("dilation_flow: image beyond the space");
  }
  return ChartPoint{Chart::Polar, r, q.u2};
}

// Inversion in the circle of power p0: tk(k1,r'/2) tk(k1,r/2) = p0, phi kept.
inline ChartPoint inversion_circle(const KappaPair& kp, double p0,
                                   const ChartPoint& p) {
  const ChartPoint q = convert(kp, p, Chart::Polar);
  const double t = tk(kp.k1, q.u1 / 2.0);
  if (std::abs(t) < kPoleTol)
    throw PoleError("inversion_circle: point at the origin");
  double r;
  try {
    r = 2.0 * arc_tk(kp.k1, p0 / t);
  } catch (const DomainError&) {
    throw RangeError("inversion_circle: image beyond the space");
  }
  return ChartPoint{Chart::Polar, r, q.u2};
}

// Inversion in the equidistant of half-width d around the base line x = 0,
// acting on the parallel II abscissa.  The Moebius form over sqrt(kappa1)
// collapses to the real fractional-linear map
//   t' = (t - u) / (kappa1 u t - 1),  t = tk(k1, x/2),  u = sk(k1, d),
// which is involutive and fixes x = +-d.  For kappa1 > 0 the parameter u
// corresponds to the baseline power p2 via u = (1 - k1 p2) / (sqrt(k1)(1 + k1 p2)).
inline ChartPoint inversion_equidistant(const KappaPair& kp, double u,
                                        const ChartPoint& p) {
  const ChartPoint q = convert(kp, p, Chart::ParallelII);
  const double t = tk(kp.k1, q.u1 / 2.0);
  const double den = kp.k1 * u * t - 1.0;
  if (std::abs(den) < kPoleTol)
    throw PoleError("inversion_equidistant: point at the map pole");
  double x;
  try {
    x = 2.0 * arc_tk(kp.k1, (t - u) / den);
  } catch (const DomainError&) {
    throw RangeError("inversion_equidistant: image beyond the space");
  }
  return ChartPoint{Chart::ParallelII, x, q.u2};
}

// ---------------------------------------------------------------------------
// Bracket tables.

enum class ConfBasis { PL, PG, RG };

inline std::array<ConfGen, 6> basis_generators(ConfBasis b) {
  switch (b) {
    case ConfBasis::PL:
      return {ConfGen::P1, ConfGen::P2, ConfGen::J12,
              ConfGen::L1, ConfGen::L2, ConfGen::D};
    case ConfBasis::PG:
      return {ConfGen::P1, ConfGen::P2, ConfGen::J12,
              ConfGen::G1, ConfGen::G2, ConfGen::D};
    case ConfBasis::RG:
      return {ConfGen::R1, ConfGen::R2, ConfGen::J12,
              ConfGen::G1, ConfGen::G2, ConfGen::D};
  }
  return {};
}

// Coefficients of [X, Y] over the basis, X and Y given by their indices in
// basis order.
inline std::array<double, 6> bracket_coeffs(const KappaPair& kp, ConfBasis b,
                                            int i, int j) {
  std::array<double, 6> c{};
  if (i == j) return c;
  if (i > j) {
    c = bracket_coeffs(kp, b, j, i);
    for (double& x : c) x = -x;
    return c;
  }
  const double k1 = kp.k1, k2 = kp.k2;
  // index layout: 0,1 = translation-like pair; 2 = J; 3,4 = second pair; 5 = D
  switch (b) {
    case ConfBasis::PL:
      if (i == 0 && j == 1) c[2] = k1;            // [P1,P2] = k1 J
      else if (i == 0 && j == 2) c[1] = -1.0;     // [P1,J] = -P2
      else if (i == 1 && j == 2) c[0] = k2;       // [P2,J] = k2 P1
      else if (i == 0 && j == 3) c[5] = k1;       // [P1,L1] = k1 D
      else if (i == 1 && j == 4) c[5] = k1 * k2;  // [P2,L2] = k1 k2 D
      else if (i == 2 && j == 3) c[4] = 1.0;      // [J,L1] = L2
      else if (i == 2 && j == 4) c[3] = -k2;      // [J,L2] = -k2 L1
      else if (i == 3 && j == 4) c[2] = -k1;      // [L1,L2] = -k1 J
      else if (i == 0 && j == 5) c[3] = -1.0;     // [P1,D] = -L1
      else if (i == 1 && j == 5) c[4] = -1.0;     // [P2,D] = -L2
      else if (i == 3 && j == 5) c[0] = -1.0;     // [L1,D] = -P1
      else if (i == 4 && j == 5) c[1] = -1.0;     // [L2,D] = -P2
      break;
    case ConfBasis::PG:
      if (i == 0 && j == 1) c[2] = k1;
      else if (i == 0 && j == 2) c[1] = -1.0;
      else if (i == 1 && j == 2) c[0] = k2;
      else if (i == 0 && j == 3) c[5] = 1.0;       // [P1,G1] = D
      else if (i == 0 && j == 4) c[2] = -1.0;      // [P1,G2] = -J
      else if (i == 1 && j == 3) c[2] = 1.0;       // [P2,G1] = J
      else if (i == 1 && j == 4) c[5] = k2;        // [P2,G2] = k2 D
      else if (i == 2 && j == 3) c[4] = 1.0;       // [J,G1] = G2
      else if (i == 2 && j == 4) c[3] = -k2;       // [J,G2] = -k2 G1
      else if (i == 0 && j == 5) { c[0] = -1.0; c[3] = -k1; }  // [P1,D]
      else if (i == 1 && j == 5) { c[1] = -1.0; c[4] = -k1; }  // [P2,D]
      else if (i == 3 && j == 5) c[3] = 1.0;       // [G1,D] = G1
      else if (i == 4 && j == 5) c[4] = 1.0;       // [G2,D] = G2
      break;
    case ConfBasis::RG:
      if (i == 0 && j == 2) c[1] = -1.0;           // [R1,J] = -R2
      else if (i == 1 && j == 2) c[0] = k2;        // [R2,J] = k2 R1
      else if (i == 0 && j == 3) c[5] = 1.0;       // [R1,G1] = D
      else if (i == 0 && j == 4) c[2] = -1.0;      // [R1,G2] = -J
      else if (i == 1 && j == 3) c[2] = 1.0;       // [R2,G1] = J
      else if (i == 1 && j == 4) c[5] = k2;        // [R2,G2] = k2 D
      else if (i == 2 && j == 3) c[4] = 1.0;
      else if (i == 2 && j == 4) c[3] = -k2;
      else if (i == 0 && j == 5) c[0] = -1.0;      // [R1,D] = -R1
      else if (i == 1 && j == 5) c[1] = -1.0;
      else if (i == 3 && j == 5) c[3] = 1.0;
      else if (i == 4 && j == 5) c[4] = 1.0;
      break;
  }
  return c;
}

// Numeric Lie bracket of two generator fields at a point.
inline Eigen::Vector2d field_bracket(const KappaPair& kp, ConfGen X, ConfGen Y,
                                     const ChartPoint& p, double h = 1e-5) {
  const Chart chart = p.chart;
  auto comp = [&](ConfGen g, int c) {
    return [&kp, g, c, chart](double u, double v) {
      return conf_field(kp, g, ChartPoint{chart, u, v})(c);
    };
  };
  const Eigen::Vector2d Xv = conf_field(kp, X, p);
  const Eigen::Vector2d Yv = conf_field(kp, Y, p);
  Eigen::Vector2d out;
  for (int c = 0; c < 2; ++c) {
    const Fn2 fx = comp(X, c), fy = comp(Y, c);
    double acc = 0.0;
    for (int k = 0; k < 2; ++k)
      acc += Xv(k) * fd_partial(fy, p.u1, p.u2, k, h) -
             Yv(k) * fd_partial(fx, p.u1, p.u2, k, h);
    out(c) = acc;
  }
  return out;
}

// Max residual of the numeric brackets against the table, over the whole
// basis, at one point.
inline double bracket_check(const KappaPair& kp, ConfBasis b,
                            const ChartPoint& p, double h = 1e-5) {
  const auto gens = basis_generators(b);
  double worst = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const Eigen::Vector2d num = field_bracket(kp, gens[i], gens[j], p, h);
      Eigen::Vector2d expect = Eigen::Vector2d::Zero();
      const auto c = bracket_coeffs(kp, b, i, j);
      for (int k = 0; k < 6; ++k)
        if (c[k] != 0.0) expect += c[k] * conf_field(kp, gens[k], p);
      worst = std::max(worst, (num - expect).cwiseAbs().maxCoeff());
    }
  return worst;
}

// ---------------------------------------------------------------------------
// Casimirs as composed derivations on test functions.

// First-order derivation along a generator field, by finite differences.
inline double apply_gen(const KappaPair& kp, ConfGen g, const Fn2& f,
                        double u, double v, Chart chart, double h = 1e-4) {
  const Eigen::Vector2d X = conf_field(kp, g, ChartPoint{chart, u, v});
  return X(0) * fd_partial(f, u, v, 0, h) + X(1) * fd_partial(f, u, v, 1, h);
}

inline Fn2 derivation(const KappaPair& kp, ConfGen g, const Fn2& f,
                      Chart chart, double h = 1e-4) {
  return [&kp, g, f, chart, h](double u, double v) {
    return apply_gen(kp, g, f, u, v, chart, h);
  };
}

// Residual of both Casimirs of the chosen basis acting on a test function:
// they must coincide with the same expression evaluated in any other basis;
// here we check the PG-basis Casimirs against the RG- and PL-basis forms.
struct CasimirTerm {
  double coeff;
  std::vector<ConfGen> word;  // applied right to left
};

inline std::vector<CasimirTerm> casimir_terms(ConfBasis b, int which,
                                              const KappaPair& kp) {
  using G = ConfGen;
  const double k1 = kp.k1, k2 = kp.k2;
  if (which == 1) {
    switch (b) {
      case ConfBasis::PL:
        return {{-k1, {G::J12, G::J12}}, {k1 * k2, {G::D, G::D}},
                {k2, {G::L1, G::L1}},    {-k2, {G::P1, G::P1}},
                {1.0, {G::L2, G::L2}},   {-1.0, {G::P2, G::P2}}};
      case ConfBasis::PG:
        return {{-1.0, {G::J12, G::J12}}, {k2, {G::D, G::D}},
                {k2, {G::P1, G::G1}},     {k2, {G::G1, G::P1}},
                {1.0, {G::P2, G::G2}},    {1.0, {G::G2, G::P2}},
                {k1 * k2, {G::G1, G::G1}}, {k1, {G::G2, G::G2}}};
      case ConfBasis::RG:
        return {{-1.0, {G::J12, G::J12}}, {k2, {G::D, G::D}},
                {k2, {G::R1, G::G1}},     {k2, {G::G1, G::R1}},
                {1.0, {G::R2, G::G2}},    {1.0, {G::G2, G::R2}}};
    }
  }
  switch (b) {
    case ConfBasis::PL:
      return {{k1, {G::J12, G::D}}, {1.0, {G::L1, G::P2}},
              {-1.0, {G::P1, G::L2}}};
    case ConfBasis::PG:
      return {{1.0, {G::J12, G::D}}, {1.0, {G::G1, G::P2}},
              {-1.0, {G::P1, G::G2}}};
    case ConfBasis::RG:
      return {{1.0, {G::J12, G::D}}, {1.0, {G::G1, G::R2}},
              {-1.0, {G::R1, G::G2}}};
  }
  return {};
}

inline double apply_casimir(const KappaPair& kp, ConfBasis b, int which,
                            const Fn2& f, const ChartPoint& p,
                            double h = 1e-4) {
  double acc = 0.0;
  for (const auto& term : casimir_terms(b, which, kp)) {
    Fn2 g = f;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it)
      g = derivation(kp, *it, g, p.chart, h);
    acc += term.coeff * g(p.u1, p.u2);
  }
  return acc;
}

// Basis independence of the Casimirs: PG vs PL (kappa1-weighted pair) and
// PG vs RG, on a test function at a point.  Note C1(PL) = k1 C1(PG) and
// C2(PL) = k1 C2(PG) by the change of basis; RG equals PG exactly.
inline double casimir_residual(const KappaPair& kp, int which, const Fn2& f,
                               const ChartPoint& p, double h = 1e-4) {
  const double pg = apply_casimir(kp, ConfBasis::PG, which, f, p, h);
  const double rg = apply_casimir(kp, ConfBasis::RG, which, f, p, h);
  const double pl = apply_casimir(kp, ConfBasis::PL, which, f, p, h);
  return std::max(std::abs(pg - rg), std::abs(pl - kp.k1 * pg));
}

// ---------------------------------------------------------------------------
// Conformal Killing factors.

// mu_X with L_X g = mu_X g; purely in terms of the ambient coordinates.
inline double conformal_factor(const KappaPair& kp, ConfGen g,
                               const ChartPoint& p) {
  const WeierstrassPoint w = to_weierstrass(kp, p);
  switch (g) {
    case ConfGen::P1:
    case ConfGen::P2:
    case ConfGen::J12: return 0.0;
    case ConfGen::D: return -2.0 * w(0);
    case ConfGen::G1: return 2.0 * w(1);
    case ConfGen::G2: return 2.0 * kp.k2 * w(2);
    case ConfGen::L1: return 2.0 * kp.k1 * w(1);
    case ConfGen::L2: return 2.0 * kp.k12() * w(2);
    case ConfGen::R1: return kp.k1 * w(1);
    case ConfGen::R2: return kp.k12() * w(2);
  }
  return 0.0;
}

// Leafwise conformal factor for the subsidiary metric at kappa2 = 0.
inline double conformal_factor_subsidiary(const KappaPair& kp, ConfGen g,
                                          const ChartPoint& p) {
  if (kp.k2 != 0.0)
    throw DegenerateMetricError("subsidiary factor needs kappa2 = 0");
  const ChartPoint q = convert(kp, p, Chart::ParallelI);
  switch (g) {
    case ConfGen::P1:
    case ConfGen::P2:
    case ConfGen::J12: return 0.0;
    case ConfGen::D: return -2.0 * ck(kp.k1, q.u1);
    case ConfGen::G1: return 2.0 * sk(kp.k1, q.u1);
    case ConfGen::G2: return 0.0;
    case ConfGen::L1: return 2.0 * kp.k1 * sk(kp.k1, q.u1);
    case ConfGen::L2: return 0.0;
    case ConfGen::R1: return kp.k1 * sk(kp.k1, q.u1);
    case ConfGen::R2: return 0.0;
  }
  return 0.0;
}

// Residual of the conformal Killing equation L_X g = mu_X g at a point, by
// finite differences of the closed-form metric.  For kappa2 = 0 the
// subsidiary metric is used and only the leafwise component is meaningful.
inline double lie_derivative_check(const KappaPair& kp, ConfGen gen,
                                   const ChartPoint& p, double h = 1e-5) {
  const Chart chart = p.chart;
  auto gmat = [&](double u, double v) -> Eigen::Matrix2d {
    const MetricAtPoint m = metric_at(kp, ChartPoint{chart, u, v});
    Eigen::Matrix2d g;
    g << m.g11, m.g12, m.g12, m.g22;
    return g;
  };
  auto xcomp = [&](int c) {
    return [&kp, gen, c, chart](double u, double v) {
      return conf_field(kp, gen, ChartPoint{chart, u, v})(c);
    };
  };
  const Eigen::Vector2d X = conf_field(kp, gen, p);
  Eigen::Matrix2d dX;  // dX(k, i) = d_k X^i
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      dX(k, i) = fd_partial(xcomp(i), p.u1, p.u2, k, h);
  const Eigen::Matrix2d g0 = gmat(p.u1, p.u2);
  Eigen::Matrix2d lie;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Fn2 gij = [&gmat, i, j](double u, double v) {
        return gmat(u, v)(i, j);
      };
      double t = X(0) * fd_partial(gij, p.u1, p.u2, 0, h) +
                 X(1) * fd_partial(gij, p.u1, p.u2, 1, h);
      for (int k = 0; k < 2; ++k)
        t += g0(k, j) * dX(i, k) + g0(i, k) * dX(j, k);
      lie(i, j) = t;
    }
  if (kp.k2 != 0.0) {
    const double mu = conformal_factor(kp, gen, p);
    return (lie - mu * g0).cwiseAbs().maxCoeff();
  }
  // kappa2 = 0: check the leafwise component of the subsidiary metric
  auto g2 = [&](double u, double v) {
    const MetricAtPoint m = metric_at(kp, ChartPoint{chart, u, v});
    if (!m.has_subsidiary)
      throw DegenerateMetricError("subsidiary metric unavailable");
    return m.subsidiary;
  };
  const double s0 = g2(p.u1, p.u2);
  double lie22 = X(0) * fd_partial(g2, p.u1, p.u2, 0, h) +
                 X(1) * fd_partial(g2, p.u1, p.u2, 1, h) +
                 2.0 * s0 * dX(1, 1);
  const double mu = conformal_factor_subsidiary(kp, gen, p);
  return std::abs(lie22 - mu * s0);
}

// ---------------------------------------------------------------------------
// Laplace / wave operator.

struct LaplaceCoeffs {
  double a11 = 0.0, a22 = 0.0;  // second-order coefficients (diagonal)
  double b1 = 0.0, b2 = 0.0;    // first-order coefficients
};

inline LaplaceCoeffs laplace_operator(const KappaPair& kp,
                                      const ChartPoint& p) {
  validate_chart_point(kp, p);
  const double k1 = kp.k1, k2 = kp.k2, k12 = kp.k12();
  LaplaceCoeffs c;
  switch (p.chart) {
    case Chart::ParallelI: {
      const double C = ck(k12, p.u2);
      c.a11 = k2 / (C * C);
      c.a22 = 1.0;
      c.b2 = -k12 * tk(k12, p.u2);
      break;
    }
    case Chart::ParallelII: {
      const double C = ck(k1, p.u1);
      c.a11 = k2;
      c.a22 = 1.0 / (C * C);
      c.b1 = -k12 * tk(k1, p.u1);
      break;
    }
    case Chart::Polar: {
      const double S = sk(k1, p.u1);
      if (std::abs(S) < kPoleTol)
        throw PoleError("laplace_operator: polar chart at r = 0");
      c.a11 = k2;
      c.a22 = 1.0 / (S * S);
      c.b1 = k2 / tk(k1, p.u1);
      break;
    }
  }
  return c;
}

inline double apply_laplace(const KappaPair& kp, const Fn2& f, double u,
                            double v, Chart chart, double h = 1e-4) {
  const LaplaceCoeffs c = laplace_operator(kp, ChartPoint{chart, u, v});
  return c.a11 * fd_second(f, u, v, 0, 0, h) +
         c.a22 * fd_second(f, u, v, 1, 1, h) +
         c.b1 * fd_partial(f, u, v, 0, h) + c.b2 * fd_partial(f, u, v, 1, h);
}

// Commutation factor rho_X in [Box, X] f = rho_X Box f.  It coincides with
// the conformal Killing factor of the generator.
inline double symmetry_factor(const KappaPair& kp, ConfGen g,
                              const ChartPoint& p) {
  return conformal_factor(kp, g, p);
}

// Residual of [Box, X] f - rho_X Box f at a point.
inline double symmetry_commutator_check(const KappaPair& kp, ConfGen g,
                                        const Fn2& f, const ChartPoint& p,
                                        double h = 1e-3) {
  const Chart chart = p.chart;
  const Fn2 boxf = [&kp, f, chart, h](double u, double v) {
    return apply_laplace(kp, f, u, v, chart, h);
  };
  const Fn2 xf = [&kp, g, f, chart, h](double u, double v) {
    return apply_gen(kp, g, f, u, v, chart, h);
  };
  const double lhs = apply_gen(kp, g, boxf, p.u1, p.u2, chart, h) -
                     apply_laplace(kp, xf, p.u1, p.u2, chart, h);
  const double rhs = -symmetry_factor(kp, g, p) *
                     apply_laplace(kp, f, p.u1, p.u2, chart, h);
  return std::abs(lhs - rhs);
}

}  // namespace ckgeom
