#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "core/arith.hpp"

using namespace qs;

// independent trial-division oracle
static bool trial_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; d++)
    if (n % d == 0) return false;
  return true;
}

TEST_CASE("sieve agrees with trial division") {
  PrimeTable pt(10'000);
  for (uint64_t n = 0; n <= 10'000; n++)
    if (n >= 2) CHECK(pt.is_prime(n) == trial_prime(n));
  CHECK(pt.primes_upto(10) == std::vector<uint64_t>{2, 3, 5, 7});
}

TEST_CASE("prime counts") {
  CHECK(PrimeTable(100).count() == 25);
  CHECK(PrimeTable(1'000'000).count() == 78498);
  CHECK(PrimeTable(2).count() == 1);
  CHECK_THROWS_AS(PrimeTable(1), std::invalid_argument);
}

TEST_CASE("segment boundaries are handled") {
  // limits straddling the segment size (2^20 odds = values near 2^21)
  PrimeTable pt(2'200'000);
  uint64_t c = 0;
  pt.for_each_prime(2'090'000, 2'110'000, [&](uint64_t p) {
    c++;
    CHECK(trial_prime(p));
  });
  CHECK(c > 0);
}

TEST_CASE("factorize") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(12).factors == std::vector<std::pair<uint64_t, int>>{{2, 2}, {3, 1}});
  CHECK(factorize(4324320).factors ==
        std::vector<std::pair<uint64_t, int>>{{2, 5}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {13, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  // beyond the SPF table
  auto f = factorize(10'000'019ULL * 3);
  CHECK(f.reconstruct() == 10'000'019ULL * 3);
  // reconstruction is exact on a dense range
  for (uint64_t n = 1; n <= 20'000; n++) {
    auto g = factorize(n);
    CHECK(g.reconstruct() == n);
    for (size_t i = 1; i < g.factors.size(); i++) CHECK(g.factors[i - 1].first < g.factors[i].first);
  }
}

TEST_CASE("s_of") {
  CHECK(s_of(1) == 1);
  CHECK(s_of(2 * 9 * 49 * 13) == 7);
  CHECK(s_of(4324320) == 77);
  for (uint64_t n = 1; n <= 5000; n++) {
    uint64_t s = s_of(n);
    CHECK(n % s == 0);
    CHECK(std::gcd(s, uint64_t{6}) == 1);
    auto f = factorize(s);
    for (auto [p, e] : f.factors) CHECK(e == 1);
  }
}

TEST_CASE("two squares criterion vs brute force") {
  CHECK(is_sum_two_squares(0));
  CHECK_FALSE(is_sum_two_squares(12));
  CHECK(is_sum_two_squares(58));
  for (uint64_t n = 0; n <= 3000; n++)
    CHECK(is_sum_two_squares(n) == is_sum_two_squares_bruteforce(n));
}

TEST_CASE("in_S vs brute force") {
  CHECK(in_S(2));
  CHECK_FALSE(in_S(12));
  CHECK(in_S(45));
  for (uint64_t n = 1; n <= 5000; n++) CHECK(in_S(n) == in_S_bruteforce(n));
}

TEST_CASE("P and Pstar") {
  CHECK(in_P(2));
  CHECK_FALSE(in_P(13));
  CHECK_THROWS_AS(in_P(12), std::invalid_argument);

  PrimeTable pt(100);
  std::set<uint64_t> P, Pstar;
  pt.for_each_prime(2, 100, [&](uint64_t p) {
    if (in_P(p)) P.insert(p);
    if (in_Pstar(p)) Pstar.insert(p);
  });
  CHECK(P == std::set<uint64_t>{2, 3, 5, 11, 17, 19, 37, 41, 53, 59, 73, 83});
  CHECK(Pstar == std::set<uint64_t>{2, 3, 11, 59, 83});

  PrimeTable big(20'000);
  big.for_each_prime(2, 20'000, [&](uint64_t p) {
    CHECK(in_P(p) == in_P_bruteforce(p));
    CHECK(in_Pstar(p) == in_Pstar_bruteforce(p));
    if (in_Pstar(p)) CHECK(in_P(p));
  });
}

TEST_CASE("mod 9 residues of P") {
  PrimeTable pt(1'000'000);
  auto mp = mask_P(pt, 1'000'000);
  std::set<uint64_t> residues;
  for (uint64_t p = 2; p <= 1'000'000; p++)
    if (mp[p] && p != 3) residues.insert(p % 9);
  CHECK(residues == std::set<uint64_t>{1, 2, 5, 8});
}

TEST_CASE("masks consistent with predicates") {
  PrimeTable pt(2000);
  auto mp = mask_P(pt, 2000);
  auto ms = mask_Pstar(pt, 2000);
  for (uint64_t n = 0; n <= 2000; n++) {
    if (mp[n]) CHECK(pt.is_prime(n));
    if (ms[n]) CHECK(mp[n]);
  }
}
