#include <cmath>
#include <random>

#include "ckgeom/trig.hpp"
#include "doctest.h"

using namespace ckgeom;

TEST_CASE("curvature trig: frozen reference values") {
  CHECK(ck(-1, 1) == doctest::Approx(1.54308063481524377).epsilon(1e-14));
  CHECK(ck(1, M_PI / 2) == doctest::Approx(0.0).scale(1));
  CHECK(sk(1, M_PI / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sk(2, 0.7) == doctest::Approx(0.59114004239598898).epsilon(1e-14));
  CHECK(vk(-3, 0.9) == doctest::Approx(0.49395170000379781).epsilon(1e-14));
  CHECK(tk(1.7, 0.3) == doctest::Approx(0.31629818032683076).epsilon(1e-14));
  CHECK(vk(1, M_PI) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ck(0, 5.0) == 1.0);
  CHECK(sk(0, 5.0) == 5.0);
  CHECK(vk(0, 3.0) == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(tk(0, 5.0) == 5.0);
}

TEST_CASE("curvature trig: fundamental identity and addition formulas") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uk(-2.0, 2.0), ux(-1.5, 1.5);
  for (int i = 0; i < 500; ++i) {
    const double k = uk(rng), x = ux(rng), y = ux(rng);
    const double c = ck(k, x), s = sk(k, x);
    CHECK(c * c + k * s * s == doctest::Approx(1.0).epsilon(1e-12));
    // versine consistency (1 - ck) = k vk
    CHECK(1.0 - c == doctest::Approx(k * vk(k, x)).epsilon(1e-11).scale(1));
    // addition
    CHECK(ck(k, x + y) ==
          doctest::Approx(c * ck(k, y) - k * s * sk(k, y)).epsilon(1e-11));
    CHECK(sk(k, x + y) ==
          doctest::Approx(s * ck(k, y) + c * sk(k, y)).epsilon(1e-11));
  }
}

TEST_CASE("curvature trig: continuity through kappa = 0") {
  for (double x : {0.3, 1.1, 2.7}) {
    for (double eps : {1e-9, -1e-9}) {
      CHECK(ck(eps, x) == doctest::Approx(1.0 - eps * x * x / 2).epsilon(1e-12));
      CHECK(sk(eps, x) == doctest::Approx(x - eps * x * x * x / 6).epsilon(1e-12));
      CHECK(vk(eps, x) == doctest::Approx(x * x / 2).epsilon(1e-7));
      CHECK(lambda_fn(eps, x) == doctest::Approx(x).epsilon(1e-8));
      CHECK(arc_sk(eps, x) == doctest::Approx(x).epsilon(1e-8));
      CHECK(arc_tk(eps, x) == doctest::Approx(x).epsilon(1e-8));
    }
  }
}

TEST_CASE("curvature trig: inverses round-trip on principal branches") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> uk(-2.0, 2.0), ux(0.01, 1.2);
  for (int i = 0; i < 300; ++i) {
    const double k = uk(rng);
    double x = ux(rng);
    if (k > 0) x = std::min(x, 0.9 * M_PI / (2 * std::sqrt(k)));
    CHECK(arc_sk(k, sk(k, x)) == doctest::Approx(x).epsilon(1e-12));
    CHECK(arc_tk(k, tk(k, x)) == doctest::Approx(x).epsilon(1e-12));
    CHECK(arc_vk(k, vk(k, x)) == doctest::Approx(x).epsilon(1e-10));
    if (k != 0) CHECK(arc_ck(k, ck(k, x)) == doctest::Approx(x).epsilon(1e-7));
  }
  CHECK(arc_vk(1, 2) == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("curvature trig: derivative formulas against finite differences") {
  const double h = 1e-6;
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> uk(-2.0, 2.0), ux(-1.2, 1.2);
  for (int i = 0; i < 200; ++i) {
    const double k = uk(rng), x = ux(rng);
    auto fd = [&](auto f) {
      const double d1 = (f(k, x + h) - f(k, x - h)) / (2 * h);
      const double d2 = (f(k, x + h / 2) - f(k, x - h / 2)) / h;
      return (4 * d2 - d1) / 3;
    };
    CHECK(d_ck(k, x) == doctest::Approx(fd([](double k, double x) {
            return ck(k, x);
          })).epsilon(1e-7).scale(1));
    CHECK(d_sk(k, x) == doctest::Approx(fd([](double k, double x) {
            return sk(k, x);
          })).epsilon(1e-7).scale(1));
    CHECK(d_vk(k, x) == doctest::Approx(fd([](double k, double x) {
            return vk(k, x);
          })).epsilon(1e-7).scale(1));
    if (std::abs(ck(k, x)) > 0.2) {
      CHECK(d_tk(k, x) == doctest::Approx(fd([](double k, double x) {
              return tk(k, x);
            })).epsilon(1e-6).scale(1));
      CHECK(d_lambda_fn(k, x) == doctest::Approx(fd([](double k, double x) {
              return lambda_fn(k, x);
            })).epsilon(1e-6).scale(1));
    }
  }
}

TEST_CASE("secant integral: frozen quadrature values and identities") {
  // against direct numerical quadrature of 1/ck
  CHECK(lambda_fn(1, 1) == doctest::Approx(1.22619117088351707).epsilon(1e-13));
  CHECK(lambda_fn(-1, 1) == doctest::Approx(0.86576948323965862).epsilon(1e-13));
  CHECK(lambda_fn(2.5, 0.55) ==
        doctest::Approx(0.63622813564484946).epsilon(1e-12));
  CHECK(lambda_fn(-1.8, 2.2) ==
        doctest::Approx(1.09297531164548687).epsilon(1e-12));

  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> uk(0.1, 2.0), ux(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double k = uk(rng);
    const double x = ux(rng) * 0.9 * M_PI / (2 * std::sqrt(k));
    const double L = lambda_fn(k, x);
    // half-angle transfer and inversion
    CHECK(tk(-k, L / 2) == doctest::Approx(tk(k, x / 2)).epsilon(1e-11));
    CHECK(lambda_fn(-k, L) == doctest::Approx(x).epsilon(1e-11));
    // component transfer
    CHECK(ck(-k, L) == doctest::Approx(1.0 / ck(k, x)).epsilon(1e-11));
    CHECK(sk(-k, L) == doctest::Approx(tk(k, x)).epsilon(1e-11));
    CHECK(tk(-k, L) == doctest::Approx(sk(k, x)).epsilon(1e-11));
  }
}

TEST_CASE("secant integral: extended branch bookkeeping") {
  auto [v0, b0] = lambda_extended(1.0, 1.0);
  CHECK(b0 == LambdaBranch::principal);
  CHECK(v0 == doctest::Approx(lambda_fn(1.0, 1.0)));
  auto [v1, b1] = lambda_extended(1.0, M_PI);
  CHECK(b1 == LambdaBranch::second_copy);
  CHECK(v1 == doctest::Approx(0.0).scale(1));
  auto [v2, b2] = lambda_extended(1.0, 2.0);
  CHECK(b2 == LambdaBranch::second_copy);
  CHECK(v2 == doctest::Approx(lambda_fn(1.0, 2.0 - M_PI)));
  CHECK_THROWS_AS(lambda_extended(1.0, M_PI / 2), DomainError);
  CHECK_THROWS_AS(lambda_extended(-1.0, 0.3), DomainError);
  CHECK_THROWS_AS(lambda_fn(1.0, 1.6), DomainError);
}

TEST_CASE("curvature trig: pole and domain errors") {
  CHECK_THROWS_AS(tk(1.0, M_PI / 2), PoleError);
  CHECK_THROWS_AS(d_tk(1.0, M_PI / 2), PoleError);
  CHECK_THROWS_AS(arc_sk(1.0, 1.5), DomainError);
  CHECK_THROWS_AS(arc_ck(1.0, 1.5), DomainError);
  CHECK_THROWS_AS(arc_ck(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(arc_tk(-1.0, 1.5), DomainError);
  CHECK_THROWS_AS(arc_vk(1.0, -0.5), DomainError);
}
