#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/analytic.hpp"

using namespace qs;

TEST_CASE("quadrature matches elementary antiderivatives") {
  auto r = integrate([](double t) { return t * t; }, 0, 3, 1e-12);
  CHECK(std::abs(r.value - 9.0) < 1e-10);
  CHECK(r.converged);
  auto e = integrate([](double t) { return std::exp(t); }, -1, 2, 1e-12);
  CHECK(std::abs(e.value - (std::exp(2.0) - std::exp(-1.0))) < 1e-10);
  auto z = integrate([](double) { return 1.0; }, 2, 2, 1e-12);
  CHECK(z.value == 0);
}

TEST_CASE("I1 quadrature agrees with the closed form") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> ur(0.34, 0.5), us(2.1, 4.0);
  for (int i = 0; i < 100; i++) {
    double rho2 = ur(rng), sigma = us(rng);
    if (rho2 * sigma <= 1.001) continue;
    auto q = I1(rho2, sigma, 1e-12);
    CHECK(std::abs(q.value - I1_closed(rho2, sigma)) < 1e-9);
    CHECK(q.converged);
  }
  CHECK_THROWS_AS(I1(0.3, 3.0, 1e-10), std::domain_error);  // rho2*sigma = 0.9
}

TEST_CASE("I2 quadrature agrees with a dense midpoint rule") {
  for (auto [rho1, sigma] : {std::pair{0.5, 3.0}, {0.475, 120.0 / 37}}) {
    auto q = I2(rho1, sigma, 1e-12);
    double oracle = I2_oracle_midpoint(rho1, sigma);
    CHECK(std::abs(q.value - oracle) < 1e-6);
  }
  CHECK_THROWS_AS(I2(0.5, 2.0, 1e-10), std::domain_error);
}

TEST_CASE("H holds with clear margin at both reference parameter points") {
  HResult a = check_H({0.5, 3.0 / 7, 3.0}, 1e-12);
  CHECK(a.holds);
  CHECK(a.margin > 1e-3);
  HResult b = check_H({0.475, 0.95 * 3.0 / 7, 120.0 / 37}, 1e-12);
  CHECK(b.holds);
  CHECK(b.margin > 1e-3);
}

TEST_CASE("sieve functions at special points") {
  CHECK(sieve_f(1) == 0);
  CHECK(std::abs(sieve_F(2) - std::exp(kEulerGamma)) < 1e-15);
  double f2 = std::sqrt(std::exp(kEulerGamma) / (2 * M_PI)) * 2 * std::log(1 + std::sqrt(2.0));
  CHECK(std::abs(sieve_f(2) - f2) < 1e-14);
  CHECK_THROWS_AS(sieve_f(0.5), std::domain_error);
  CHECK_THROWS_AS(sieve_F(0.0), std::domain_error);
}

TEST_CASE("singular product collapses to primes dividing K") {
  // the local factor is exactly 1 for every p not dividing K
  LinearForm L{1296, 5};
  for (int64_t p : {5, 7, 11, 13, 97, 101, 9973}) {
    CHECK(singular_local_factor(L, p) == rational(1));
  }
  CHECK(singular_product(L) == rational(3));
  CHECK(singular_product(LinearForm{4, 2}) == rational(0));
  // 216n+1: p=2 count 0 -> 2; p=3 count 0 -> 3/2
  CHECK(singular_product(LinearForm{216, 1}) == rational(3));
  // a form with an odd two-class prime: 7 | K, b=3 -> residue 3 never in {0,1}
  {
    rational f7 = singular_local_factor(LinearForm{7, 3}, 7);
    CHECK(f7 == rational(7, 5));
  }
}

TEST_CASE("truncated Euler products converge") {
  auto e6 = euler_products(1e6);
  auto e7 = euler_products(1e7);
  CHECK(std::abs(e6.A - e7.A) < 1e-6);
  CHECK(std::abs(e6.C41 - e7.C41) < 1e-6);
  CHECK(std::abs(e6.C4m1 - e7.C4m1) < 1e-6);
  CHECK(e6.A > 0.3);
  CHECK(e6.A < 0.36);  // 1/(2 sqrt 2) ~ 0.3536 shrunk slightly
  CHECK(e6.A_C4m1 == e6.A * e6.C4m1);
  CHECK_THROWS_AS(euler_products(1.0), std::invalid_argument);
}

TEST_CASE("finite products V and frak_f are exact rationals") {
  // V^SEM(z=10, K=1): primes 3,7 are -1 mod 4 -> (1/2)(5/6)
  CHECK(V_K_SEM(10, 1) == rational(5, 12));
  // K = 21 removes both factors
  CHECK(V_K_SEM(10, 21) == rational(1));
  // V^LIN(z=8, K=1, ell=1): p in {3,5,7} -> (1/2)(3/4)(5/6) = 5/16
  CHECK(V_K_LIN(8, 1, 1) == rational(5, 16));
  // p | K*ell factors are divided back out
  CHECK(V_K_LIN(8, 3, 7) == rational(3, 4));
  CHECK(frak_f(1) == rational(1));
  CHECK(frak_f(2) == rational(1));
  CHECK(frak_f(15) == rational(8, 3));
  // multiplicativity spot check
  CHECK(frak_f(15) * frak_f(7) == frak_f(105));
}
