#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/zfourier.hpp"

using namespace qs;

namespace {

std::vector<cd> random_signal(size_t N, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<cd> f(N);
  for (auto& v : f) v = cd(u(rng), u(rng));
  return f;
}

double max_abs_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); i++) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("dft basics and round trip") {
  std::vector<cd> ones(64, 1.0);
  auto oh = dft(ones);
  CHECK(std::abs(oh[0] - cd(1)) < 1e-12);
  for (size_t xi = 1; xi < 64; xi++) CHECK(std::abs(oh[xi]) < 1e-12);
  std::vector<cd> delta(64, 0.0);
  delta[0] = 1;
  for (const cd& c : dft(delta)) CHECK(std::abs(c - cd(1.0 / 64)) < 1e-15);
  std::mt19937_64 rng(7);
  for (size_t N : {64, 100, 512, 1024}) {  // 100 exercises the direct path
    auto f = random_signal(N, rng);
    CHECK(max_abs_diff(idft(dft(f)), f) < 1e-9);
  }
  CHECK_THROWS_AS(dft(std::vector<cd>{}), std::invalid_argument);
}

TEST_CASE("Parseval on random signals") {
  std::mt19937_64 rng(11);
  for (size_t N : {64, 512, 4096}) {
    auto f = random_signal(N, rng);
    double lhs = 0;
    for (const cd& v : f) lhs += std::norm(v);
    double rhs = 0;
    for (const cd& c : dft(f)) rhs += std::norm(c);
    rhs *= static_cast<double>(N);
    CHECK(std::abs(lhs - rhs) < 1e-9 * lhs);
  }
}

TEST_CASE("convolution theorem and direct agreement") {
  std::mt19937_64 rng(13);
  for (size_t N : {64, 512}) {
    auto f = random_signal(N, rng), g = random_signal(N, rng);
    auto spectral = convolve(f, g);
    auto direct = convolve_direct(f, g);
    CHECK(max_abs_diff(spectral, direct) < 1e-9);
    // (f*g)^ = fhat * ghat
    auto lh = dft(spectral);
    auto fh = dft(f), gh = dft(g);
    for (size_t xi = 0; xi < N; xi++) CHECK(std::abs(lh[xi] - fh[xi] * gh[xi]) < 1e-9);
  }
  // N*delta_0 is the unit
  std::mt19937_64 rng2(17);
  auto f = random_signal(256, rng2);
  std::vector<cd> unit(256, 0.0);
  unit[0] = 256;
  CHECK(max_abs_diff(convolve(f, unit), f) < 1e-9);
  std::vector<cd> ones(128, 1.0);
  auto oo = convolve(ones, ones);
  for (const cd& v : oo) CHECK(std::abs(v - cd(1)) < 1e-9);
  CHECK_THROWS_AS(convolve(f, ones), std::invalid_argument);
}

TEST_CASE("bohr sets by direct evaluation") {
  auto all = bohr_set({97, {0}, 0.2});
  for (char c : all) CHECK(c == 1);
  auto b = bohr_set({100, {1}, 0.1});
  for (uint64_t n = 0; n < 100; n++) {
    bool expect = n <= 10 || n >= 90;
    CHECK(static_cast<bool>(b[n]) == expect);
  }
  // measured standard lower bound |B| >= eta^{|Omega|} N / 2 on random specs
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<uint64_t> ud(0, 511);
  std::uniform_real_distribution<double> ue(1.0 / 32, 0.25);
  for (int it = 0; it < 20; it++) {
    BohrSpec s{512, {ud(rng), ud(rng), ud(rng)}, ue(rng)};
    auto mask = bohr_set(s);
    double count = 0;
    for (char c : mask) count += c;
    CHECK(count >= std::pow(s.eta, 3.0) * 512 / 2);
  }
}

TEST_CASE("chi construction satisfies all clauses") {
  auto c0 = build_chi({128, {0}, 0.1});
  for (double v : c0.values) CHECK(v == 2.0);
  CHECK(c0.report.all());

  BohrSpec s{256, {1}, 1.0 / 8};
  auto chi = build_chi(s);
  CHECK(chi.report.all());
  auto inB = bohr_set(s);
  auto inB2 = bohr_set({s.N, s.Omega, 2 * s.eta});
  for (uint64_t n = 0; n < s.N; n++) {
    if (inB[n]) CHECK(chi.values[n] >= 1.0);
    if (!inB2[n]) CHECK(chi.values[n] <= s.eta * s.eta / 8);
  }
  CHECK(chi.report.l1 >= s.eta / 2);
  CHECK(chi.complexity >= chi.coefficients.size());

  // 20 random specs all construct cleanly
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ue(1.0 / 64, 0.24);
  for (int it = 0; it < 20; it++) {
    uint64_t N = 64ULL << (it % 3);
    std::uniform_int_distribution<uint64_t> ud(0, N - 1);
    size_t k = 1 + it % 4;
    BohrSpec spec{N, {}, ue(rng)};
    for (size_t i = 0; i < k; i++) spec.Omega.push_back(ud(rng));
    auto c = build_chi(spec);
    CHECK(c.report.all());
  }
  CHECK_THROWS_AS(build_chi({64, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(build_chi({64, {1}, 1.0 / 128}), std::invalid_argument);
}

TEST_CASE("lr norms") {
  std::vector<cd> ones(100, 1.0);
  CHECK(std::abs(lr_norm(ones, 3) - 1.0) < 1e-9);
  CHECK(std::abs(lr_norm(ones, 4) - 1.0) < 1e-9);
  std::vector<cd> spike(64, 0.0);
  spike[0] = 64;
  CHECK(std::abs(lr_norm(spike, 3) - 64.0) < 1e-9);
}

TEST_CASE("transference: constant signals give empty exceptional set") {
  const double delta = 0.1;
  std::vector<double> f(1024, 2 * delta);
  auto rep = transference_demo(f, f, delta, 0.05, 10);
  CHECK(rep.T.empty());
  CHECK(rep.conclusion_holds);
}

TEST_CASE("transference: dense pairs satisfy the conclusion") {
  const double delta = 0.1, eps = 0.05, K0 = 10;
  const uint64_t N = 1024;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> uamp(0.05, 0.13), uphase(0, 2 * std::numbers::pi),
      udense(0.2, 1.0);
  std::uniform_int_distribution<uint64_t> ufreq(1, N - 1);
  for (int it = 0; it < 5; it++) {
    // f1: nonnegative trig polynomial with comfortable mass everywhere
    std::vector<double> f1(N, 1.2);
    for (int k = 0; k < 3; k++) {
      double a = uamp(rng), ph = uphase(rng);
      uint64_t xi = ufreq(rng);
      for (uint64_t n = 0; n < N; n++)
        f1[n] += a * std::cos(2 * std::numbers::pi * static_cast<double>(xi * n % N) /
                                  static_cast<double>(N) +
                              ph);
    }
    std::vector<double> f2(N);
    for (auto& v : f2) v = udense(rng);
    auto rep = transference_demo(f1, f2, delta, eps, K0);
    CHECK(rep.cond_i);
    CHECK(rep.cond_ii);
    CHECK(rep.cond_iii);
    CHECK(rep.conclusion_holds);  // would have thrown otherwise; asserted anyway
  }
}

TEST_CASE("transference: Bohr-avoiding support breaks condition (i)") {
  const uint64_t N = 4096;
  const double delta = 0.1, eps = 0.05, K0 = 10;
  uint64_t xi0 = static_cast<uint64_t>(std::llround((std::sqrt(2.0) - 1) * static_cast<double>(N)));
  std::vector<double> f(N, 0.0);
  for (uint64_t n = 0; n < N; n++)
    if (circle_dist(xi0, n, N) < 0.01) f[n] = 5.0;
  auto rep = transference_demo(f, f, delta, eps, K0);
  CHECK_FALSE(rep.cond_i);
  CHECK(rep.T.size() > eps * N);
  CHECK_FALSE(rep.conclusion_holds);
}

TEST_CASE("signal csv round trip") {
  std::mt19937_64 rng(29);
  auto f = random_signal(50, rng);
  auto back = signal_from_csv(signal_to_csv(f));
  REQUIRE(back.size() == f.size());
  CHECK(max_abs_diff(back, f) == 0);
}
