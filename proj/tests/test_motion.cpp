#include <cmath>
#include <random>

#include "ckgeom/motion.hpp"
#include "ckgeom/numeric.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ckgeom;

namespace {
Eigen::Matrix3d bracket(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  return a * b - b * a;
}
}  // namespace

TEST_CASE("motion algebra: structure constants, exactly") {
  std::mt19937_64 rng(31);
  auto pairs = testutil::nine_spaces();
  for (int i = 0; i < 100; ++i) pairs.push_back(testutil::random_kp(rng));
  for (const auto& kp : pairs) {
    const Eigen::Matrix3d P1 = generator_matrix(kp, MotionGen::P1);
    const Eigen::Matrix3d P2 = generator_matrix(kp, MotionGen::P2);
    const Eigen::Matrix3d J = generator_matrix(kp, MotionGen::J12);
    CHECK((bracket(J, P1) - P2).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((bracket(J, P2) + kp.k2 * P1).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((bracket(P1, P2) - kp.k1 * J).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("motion group: closed-form subgroups match the exponential oracle") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> ut(-1.5, 1.5);
  auto pairs = testutil::nine_spaces();
  for (int i = 0; i < 60; ++i) pairs.push_back(testutil::random_kp(rng));
  for (const auto& kp : pairs) {
    for (MotionGen g : {MotionGen::P1, MotionGen::P2, MotionGen::J12}) {
      const double t = ut(rng);
      const Eigen::Matrix3d closed = one_param(kp, g, t);
      const Eigen::Matrix3d oracle =
          testutil::expm<Eigen::Matrix3d>(t * generator_matrix(kp, g));
      CHECK((closed - oracle).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("motion group: invariance of the ambient form and the quadric") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> ut(-1.0, 1.0);
  std::uniform_int_distribution<int> ug(0, 2);
  auto pairs = testutil::nine_spaces();
  for (int i = 0; i < 40; ++i) pairs.push_back(testutil::random_kp(rng));
  for (const auto& kp : pairs) {
    // random word in the three subgroups
    Eigen::Matrix3d g = Eigen::Matrix3d::Identity();
    for (int w = 0; w < 6; ++w)
      g = compose(g, one_param(kp, static_cast<MotionGen>(ug(rng)), ut(rng)));
    CHECK(isometry_defect(kp, g) < 1e-9);
    const ChartPoint p = testutil::random_point(kp, Chart::ParallelI, rng);
    const WeierstrassPoint w = act(g, to_weierstrass(kp, p));
    CHECK(std::abs(quadric_residual(kp, w)) < 1e-9);
    // inverse via the adjoint
    const Eigen::Matrix3d gi = inverse(kp, g);
    CHECK((g * gi - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("motion group: distance invariance under random motions") {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> ut(-0.4, 0.4);
  std::uniform_int_distribution<int> ug(0, 2);
  for (const char* name : {"S2", "H2", "AdS", "dS", "E2"}) {
    const KappaPair kp = the_nine(name);
    for (int rep = 0; rep < 20; ++rep) {
      Eigen::Matrix3d g = Eigen::Matrix3d::Identity();
      for (int w = 0; w < 4; ++w)
        g = compose(g, one_param(kp, static_cast<MotionGen>(ug(rng)), ut(rng)));
      const ChartPoint p = testutil::random_point(kp, Chart::ParallelI, rng);
      ChartPoint q = testutil::random_point(kp, Chart::ParallelI, rng);
      // keep the pair close so every distance stays defined in all spaces
      q.u1 = p.u1 + 0.2 * (q.u1 - p.u1);
      q.u2 = p.u2 + 0.2 * (q.u2 - p.u2);
      const Eigen::Matrix3d L = ambient_form(kp);
      const double before = to_weierstrass(kp, p).transpose() * L *
                            to_weierstrass(kp, q);
      const double after = act(g, to_weierstrass(kp, p)).transpose() * L *
                           act(g, to_weierstrass(kp, q));
      CHECK(after == doctest::Approx(before).epsilon(1e-10).scale(1));
    }
  }
}

TEST_CASE("motion generators: chart vector fields match the flow derivative") {
  std::mt19937_64 rng(35);
  for (const auto& kp : testutil::nine_spaces()) {
    for (Chart ch : {Chart::ParallelI, Chart::ParallelII, Chart::Polar}) {
      for (MotionGen g : {MotionGen::P1, MotionGen::P2, MotionGen::J12}) {
        for (int rep = 0; rep < 8; ++rep) {
          const ChartPoint p = testutil::random_point(kp, ch, rng);
          const Eigen::Vector2d v = generator_field(kp, g, p);
          // numerical derivative of t -> exp(-t X) . p at t = 0; the
          // fundamental field of the left action on functions carries the
          // opposite sign, matching the field tables.
          const double h = 1e-5;
          Eigen::Vector2d num;
          try {
            const ChartPoint pp = act(kp, one_param(kp, g, -h), p);
            const ChartPoint pm = act(kp, one_param(kp, g, h), p);
            num << (pp.u1 - pm.u1) / (2 * h), (pp.u2 - pm.u2) / (2 * h);
          } catch (const ChartCoverageError&) {
            continue;
          }
          CHECK((v - num).cwiseAbs().maxCoeff() < 2e-6);
        }
      }
    }
  }
}
