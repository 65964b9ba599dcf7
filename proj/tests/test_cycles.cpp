#include <cmath>
#include <random>

#include "ckgeom/cycles.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ckgeom;

namespace {

// A random circle-type cycle with a usable locus.
Cycle random_circle(const KappaPair& kp, std::mt19937_64& rng,
                    ChartPoint* center_out = nullptr, double* rho_out = nullptr) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), ur(0.2, 0.8);
  ChartPoint c = testutil::random_point(kp, Chart::ParallelI, rng);
  c.u1 *= 0.5;
  c.u2 *= 0.5;
  double rho = ur(rng);
  if (kp.k1 > 0) rho = std::min(rho, 0.6 / std::sqrt(kp.k1));
  if (center_out) *center_out = c;
  if (rho_out) *rho_out = rho;
  return circle(kp, c, rho);
}

}  // namespace

TEST_CASE("cycles: circles vanish on their locus and have kg = 1/tk(rho)") {
  std::mt19937_64 rng(41);
  for (const char* name : {"S2", "E2", "H2", "AdS", "M", "dS"}) {
    const KappaPair kp = the_nine(name);
    for (int rep = 0; rep < 25; ++rep) {
      ChartPoint c;
      double rho;
      const Cycle cy = random_circle(kp, rng, &c, &rho);
      // points at distance rho from the center satisfy the equation
      const auto pts = sample_cycle(cy, kp, 24);
      REQUIRE(pts.size() > 0);
      for (const auto& p : pts) {
        CHECK(std::abs(evaluate(cy, kp, p)) < 1e-9);
        CHECK(distance(kp, c, p) == doctest::Approx(rho).epsilon(1e-7));
      }
      const double kg = geodesic_curvature(kp, cy);
      if (kp.k1 != 0.0)
        CHECK(kg == doctest::Approx(std::abs(1.0 / tk(kp.k1, rho)))
                        .epsilon(1e-9));
      else
        CHECK(kg == doctest::Approx(1.0 / rho).epsilon(1e-9));
    }
  }
}

TEST_CASE("cycles: geodesics have zero curvature and the stated locus") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ub(-0.8, 0.8);
  for (const auto& kp : testutil::nine_spaces()) {
    for (int rep = 0; rep < 15; ++rep) {
      const double b0 = ub(rng), b1 = ub(rng);
      const Cycle g = geodesic_from_betas(kp, b0, b1);
      CHECK(geodesic_curvature(kp, g) == 0.0);
      CHECK(classify(kp, g) == CycleKind::Geodesic);
      // locus check in parallel I coordinates
      for (double a : {-0.4, 0.1, 0.5}) {
        double ta = b0 * ck(kp.k1, a) + b1 * sk(kp.k1, a);
        double y;
        try {
          y = arc_tk(kp.k12(), ta);
        } catch (const DomainError&) {
          continue;
        }
        const ChartPoint p{Chart::ParallelI, a, y};
        try {
          validate_chart_point(kp, p);
        } catch (const ChartDomainError&) {
          continue;
        }
        CHECK(std::abs(evaluate(g, kp, p)) < 1e-10);
      }
    }
  }
}

TEST_CASE("cycles: chart forms of the equation agree") {
  std::mt19937_64 rng(43);
  for (const char* name : {"S2", "H2", "AdS", "dS"}) {
    const KappaPair kp = the_nine(name);
    for (int rep = 0; rep < 20; ++rep) {
      const Cycle cy = random_circle(kp, rng);
      const ChartPoint p = testutil::random_point(kp, Chart::ParallelI, rng);
      const double f1 = evaluate_parallel1_form(cy, kp, p);
      // weierstrass form divided by the transversal cosine equals form 1
      const double C = ck(kp.k12(), p.u2);
      const double fw = evaluate(cy, kp, p) / C;
      CHECK(f1 == doctest::Approx(fw).epsilon(1e-10).scale(1));
      if (kp.k12() < 0 ||
          std::abs(p.u2) < 0.9 * M_PI / (2 * std::sqrt(std::max(kp.k12(), 1e-30)))) {
        const double fl = evaluate_lambda_form(cy, kp, p);
        CHECK(fl == doctest::Approx(f1).epsilon(1e-9).scale(1));
      }
    }
  }
}

TEST_CASE("cycles: equidistants sit at constant distance from their base") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> ub(-0.5, 0.5), ud(0.1, 0.5);
  for (const char* name : {"S2", "H2", "AdS", "dS"}) {
    const KappaPair kp = the_nine(name);
    for (int rep = 0; rep < 20; ++rep) {
      const double b0 = ub(rng), b1 = ub(rng), d = ud(rng);
      Cycle eq;
      try {
        eq = equidistant(kp, b0, b1, d);
      } catch (const DomainError&) {
        continue;
      }
      CHECK(geodesic_curvature(kp, eq) ==
            doctest::Approx(std::abs(kp.k1 * tk(kp.k1, d))).epsilon(1e-9));
      // the defining relation holds on sampled locus points
      const double denom = 1.0 + kp.k2 * b1 * b1 + kp.k12() * b0 * b0;
      for (const auto& p : sample_cycle(eq, kp, 16)) {
        ChartPoint q;
        try {
          q = convert(kp, p, Chart::ParallelI);
        } catch (const ChartCoverageError&) {
          continue;
        }
        const double lhs = sk(kp.k1, d) * sk(kp.k1, d);
        const double expr =
            sk(kp.k12(), q.u2) -
            ck(kp.k12(), q.u2) *
                (b0 * ck(kp.k1, q.u1) + b1 * sk(kp.k1, q.u1));
        CHECK(lhs ==
              doctest::Approx(kp.k2 * expr * expr / denom).epsilon(1e-8).scale(1));
      }
    }
  }
}

TEST_CASE("cycles: hyperbolic classification bands") {
  const KappaPair h2 = the_nine("H2");
  CHECK(classify(h2, geodesic_from_betas(h2, 0.2, 0.3)) == CycleKind::Geodesic);
  CHECK(classify(h2, circle(h2, {Chart::ParallelI, 0.1, 0.2}, 0.7)) ==
        CycleKind::Circle);
  CHECK(classify(h2, equidistant(h2, 0.1, 0.2, 0.6)) == CycleKind::Equidistant);
  // horocycle: kg = sqrt(-k1); build it from the curvature relation
  // kg = k1 tk(k1, d) -> |tanh d| -> 1, so instead take a circle whose
  // alpha-vector is light-like: alpha = alpha0 + alpha1 human-made
  Cycle horo;
  horo.c << 1.0, 1.0, 0.0, 1.0;  // kg^2 = k2 a^2 k1^2 / (k2 a1^2 + ...) = 1
  CHECK(geodesic_curvature(h2, horo) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(classify(h2, horo) == CycleKind::Horocycle);
  Cycle line;
  line.c << 0.4, 0.1, 0.0, 0.0;
  CHECK(classify(h2, line) == CycleKind::NonGenericLine);
}

TEST_CASE("cycles: power of a point and the radii product") {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> uphi(-0.5, 0.5);
  for (const char* name : {"S2", "H2", "AdS", "dS"}) {
    const KappaPair kp = the_nine(name);
    for (int rep = 0; rep < 30; ++rep) {
      const Cycle cy = random_circle(kp, rng);
      double pw;
      try {
        pw = power_of_origin(kp, cy);
      } catch (const DegenerateCycleError&) {
        continue;
      }
      int checked = 0;
      for (int k = 0; k < 12 && checked < 3; ++k) {
        const double phi = uphi(rng) * (kp.k2 > 0 ? 4.0 : 1.0);
        const auto rs = radii_on_ray(cy, kp, phi);
        if (rs.size() != 2) continue;
        const double prod =
            tk(kp.k1, rs[0] / 2) * tk(kp.k1, rs[1] / 2);
        CHECK(prod == doctest::Approx(pw).epsilon(1e-9).scale(1));
        ++checked;
      }
    }
  }
  // flat limit: r1 r2 = 4 * power
  const KappaPair e2 = the_nine("E2");
  const Cycle fc = circle(e2, {Chart::ParallelI, 0.8, 0.3}, 0.5);
  const double pw = power_of_origin(e2, fc);
  const auto rs = radii_on_ray(fc, e2, std::atan2(0.3, 0.8));
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] * rs[1] == doctest::Approx(4.0 * pw).epsilon(1e-10));
}

TEST_CASE("cycles: numeric curvature pipeline agrees with the closed form") {
  std::mt19937_64 rng(46);
  for (const char* name : {"S2", "E2", "H2", "AdS", "M", "dS"}) {
    const KappaPair kp = the_nine(name);
    int done = 0;
    for (int rep = 0; rep < 40 && done < 10; ++rep) {
      const Cycle cy = random_circle(kp, rng);
      const double kg = geodesic_curvature(kp, cy);
      for (const auto& p : sample_cycle(cy, kp, 8)) {
        if (tangent_conditioning(kp, cy, p) < 0.2) continue;
        double kn;
        try {
          kn = kg_numeric(kp, cy, p);
        } catch (const Error&) {
          continue;
        }
        CHECK(kn == doctest::Approx(kg).epsilon(1e-6).scale(1));
        ++done;
        break;
      }
    }
    CHECK(done >= 5);
  }
}

TEST_CASE("cycles: invariance under motions") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> ut(-0.3, 0.3);
  std::uniform_int_distribution<int> ug(0, 2);
  for (const char* name : {"S2", "H2", "AdS", "dS"}) {
    const KappaPair kp = the_nine(name);
    for (int rep = 0; rep < 20; ++rep) {
      const Cycle cy = random_circle(kp, rng);
      Eigen::Matrix3d g = Eigen::Matrix3d::Identity();
      for (int w = 0; w < 4; ++w)
        g = compose(g, one_param(kp, static_cast<MotionGen>(ug(rng)), ut(rng)));
      const Cycle im = transform_cycle(kp, g, cy);
      // image cycle vanishes exactly on image points
      for (const auto& p : sample_cycle(cy, kp, 6)) {
        const WeierstrassPoint w2 = act(g, to_weierstrass(kp, p));
        const double res = im.c(0) * w2(0) + im.c(1) * w2(1) +
                           im.c(2) * w2(2) - im.c(3);
        CHECK(std::abs(res) < 1e-9);
      }
      // curvature is invariant
      CHECK(geodesic_curvature(kp, im) ==
            doctest::Approx(geodesic_curvature(kp, cy)).epsilon(1e-8));
    }
  }
}

TEST_CASE("cycles: flat-limit continuity of circle loci") {
  // circles at k1 = +-1e-9 match the flat circle to 1e-6
  const double eps = 1e-9;
  const ChartPoint c{Chart::ParallelI, 0.4, 0.2};
  for (double k2 : {1.0, -1.0}) {
    const KappaPair flat(0.0, k2);
    const Cycle f = circle(flat, c, 0.5);
    for (double k1 : {eps, -eps}) {
      const KappaPair kp(k1, k2);
      const Cycle cy = circle(kp, c, 0.5);
      for (double phi : {0.1, 0.5, 0.9}) {
        const auto r0 = radii_on_ray(f, flat, phi);
        const auto r1 = radii_on_ray(cy, kp, phi);
        REQUIRE(r0.size() == r1.size());
        for (size_t i = 0; i < r0.size(); ++i)
          CHECK(r1[i] == doctest::Approx(r0[i]).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("cycles: arc length and sector area") {
  auto [L, S] = arc_and_sector(the_nine("S2"), M_PI / 3, 1.2);
  CHECK(L == doctest::Approx(std::sin(M_PI / 3) * 1.2));
  CHECK(S == doctest::Approx((1 - std::cos(M_PI / 3)) * 1.2));
  auto [Lf, Sf] = arc_and_sector(the_nine("E2"), 2.0, 0.7);
  CHECK(Lf == doctest::Approx(2.0 * 0.7));
  CHECK(Sf == doctest::Approx(2.0 * 0.7));  // rho^2/2 * psi
  auto [Lh, Sh] = arc_and_sector(the_nine("H2"), 1.0, 2.0);
  CHECK(Lh == doctest::Approx(std::sinh(1.0) * 2.0));
  CHECK(Sh == doctest::Approx((std::cosh(1.0) - 1.0) * 2.0));
}

TEST_CASE("cycles: degenerate-input errors") {
  const KappaPair nhp = the_nine("NH+");
  CHECK_THROWS_AS(equidistant(nhp, 0.1, 0.2, 0.3), DegenerateMetricError);
  const KappaPair h2 = the_nine("H2");
  // isotropic base: 1/k2 + b1^2 + k1 b0^2 = 0 -> b0^2 = 1 + b1^2
  CHECK_THROWS_AS(equidistant(h2, std::sqrt(1.25), 0.5, 0.3),
                  IsotropicBaseError);
  const KappaPair e2 = the_nine("E2");
  Cycle lin;
  lin.c << 0.5, 0.1, 0.2, 0.5;
  CHECK_THROWS_AS(power_of_origin(e2, lin), DomainError);
}
