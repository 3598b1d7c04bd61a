#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "core/arith.hpp"
#include "core/weights.hpp"

using namespace qs;

TEST_CASE("support membership basics") {
  // x^rho = 1000: pick x=1e6 and custom rho = 0.5
  auto S = make_support(SupportKind::SEM_MINUS, 1e6, 0, 0.01, 40.0, 0.5);
  CHECK(in_support(S, 1));
  CHECK(in_support(S, 31));                 // single prime, vacuous chain
  CHECK_FALSE(in_support(S, 31 * 29));      // 31*29^2 = 26071 > 1000
  CHECK_FALSE(in_support(S, 4));            // not squarefree
  CHECK_FALSE(in_support(S, 41 * 2));       // 41 > z
  CHECK_FALSE(in_support(S, 1009));         // above x^rho (and above z)
  CHECK(weight(S, 1) == 1);
  CHECK(weight(S, 31) == -1);
  CHECK(weight(S, 31 * 29) == 0);
  CHECK(weight(S, 3 * 5) == 1);  // 3*5^2 = 75 <= 1000 -> member, mu = 1
}

static std::vector<uint64_t> oracle_members(const SieveSupport& S) {
  std::vector<uint64_t> out;
  auto lim = static_cast<uint64_t>(std::pow(S.x, S.rho) * (1 + 1e-9)) + 1;
  for (uint64_t d = 1; d <= lim; d++)
    if (in_support(S, d)) out.push_back(d);
  return out;
}

TEST_CASE("enumeration equals naive filter") {
  for (auto kind : {SupportKind::LIN_PLUS, SupportKind::SEM_MINUS, SupportKind::SEM_PLUS}) {
    for (double theta : {0.0, 1.0 / 80}) {
      auto S = make_support(kind, 1e5, theta, 0.01);
      auto fast = enumerate_support(S);
      auto slow = oracle_members(S);
      CHECK(fast == slow);
      for (size_t i = 1; i < fast.size(); i++) CHECK(fast[i - 1] < fast[i]);
    }
  }
}

TEST_CASE("splits on full desk supports") {
  const double x = 1e6;
  for (double theta : {0.0, 1.0 / 80}) {
    auto SL = make_support(SupportKind::LIN_PLUS, x, theta, 0.01);
    double DL = std::pow(x, 0.3);
    for (uint64_t d : enumerate_support(SL)) {
      auto r = split_linear(SL, d, DL);
      CHECK_FALSE(r.fallback_used);
      CHECK(split_invariants_hold(SL, r));
      CHECK(r.d1 * r.d2 == d);
    }
    auto SM = make_support(SupportKind::SEM_MINUS, x, theta, 0.01);
    double DM = std::pow(x, 0.38);
    for (uint64_t d : enumerate_support(SM)) {
      auto r = split_semilinear(SM, d, DM);
      CHECK_FALSE(r.fallback_used);
      CHECK(split_invariants_hold(SM, r));
    }
    auto SP = make_support(SupportKind::SEM_PLUS, x, theta, 0.01);
    for (uint64_t d : enumerate_support(SP)) {
      auto r = split_semilinear(SP, d, DM);
      CHECK_FALSE(r.fallback_used);
      CHECK(split_invariants_hold(SP, r));
    }
  }
}

TEST_CASE("single small prime splits as (p,1)") {
  auto S = make_support(SupportKind::LIN_PLUS, 1e6, 0, 0.01);
  double D = std::pow(1e6, 0.3);
  auto r = split_linear(S, 7, D);  // 7 <= x^(rho/3) ~ 9.5
  CHECK(r.d1 == 7);
  CHECK(r.d2 == 1);
  auto r1 = split_linear(S, 1, D);
  CHECK(r1.d1 == 1);
  CHECK(r1.d2 == 1);
}

TEST_CASE("optimality counterexample triggers lemma violation") {
  // inflated rho' = (3/7)(1-4theta) + 3*eps with eps = 0.1 at theta = 0
  const double x = 1e6, eps = 0.1;
  double rho_inflated = 3.0 / 7 + 3 * eps;
  auto S = make_support(SupportKind::SEM_MINUS, x, 0, eps, std::nullopt, rho_inflated);
  // primes ~ x^((1-4theta)/7 + eps)/2 ~ 14.3
  uint64_t d = 11 * 13 * 17;
  CHECK(in_support(S, d));
  double D = std::pow(x, 3.0 / 7);
  // no subset split satisfies the invariants
  for (uint64_t d1 : {uint64_t{1}, uint64_t{11}, uint64_t{13}, uint64_t{17}, uint64_t{11 * 13},
                      uint64_t{11 * 17}, uint64_t{13 * 17}, uint64_t{11 * 13 * 17}}) {
    SplitResult cand{d, d1, d / d1, D, true};
    CHECK_FALSE(split_invariants_hold(S, cand));
  }
  CHECK_THROWS_AS(split_semilinear(S, d, D), LemmaViolation);
  // while at the lemma's own rho the same D admits splits for every member
  auto S0 = make_support(SupportKind::SEM_MINUS, x, 0, 0.01);
  for (uint64_t m : enumerate_support(S0)) CHECK_NOTHROW(split_semilinear(S0, m, D));
}
