#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "core/arith.hpp"
#include "core/forms.hpp"

using namespace qs;

TEST_CASE("amenability examples") {
  auto a = is_amenable({1296, 5});
  CHECK(a.amenable);
  CHECK(a.j == 2);
  CHECK(a.t == 0);
  CHECK(a.h == 0);  // m = 1
  CHECK_FALSE(is_amenable({216, 2}).amenable);
  CHECK_FALSE(is_amenable({216, 7}).amenable);   // v3(6) odd
  CHECK_FALSE(is_amenable({216, 1}).amenable);   // b-1 = 0
  CHECK_FALSE(is_amenable({100, 3}).amenable);   // 216 does not divide K
  CHECK(is_amenable({4320, 37}).amenable);       // default envelope pair
  CHECK_FALSE(is_amenable({4320, 5}).amenable);  // gcd(5, 4320) = 5
  // subchecks implied by amenability
  for (int64_t b = 2; b < 3000; b++) {
    auto r = is_amenable({6480, b});
    if (r.amenable) {
      CHECK(std::gcd(mod_pos(b, 6480), int64_t{6480}) == 1);
      CHECK(6480 % 216 == 0);
      // reconstruct b-1 from the evidence
      int64_t rec = 4 * r.h + 1;
      for (int64_t i = 0; i < r.j; i++) rec *= 2;
      for (int64_t i = 0; i < 2 * r.t; i++) rec *= 3;
      CHECK(rec == b - 1);
    }
  }
}

TEST_CASE("build_W") {
  auto M = build_W(5, 5);
  CHECK(M.U == 864);
  CHECK(M.W == 4320);
  CHECK(build_W(5, 13).W == 4324320);
  CHECK_THROWS_AS(build_W(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_W(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_W(5, 200), std::range_error);  // primorial overflow
}

TEST_CASE("2-adic lemma") {
  for (int J = 5; J <= 12; J++) {
    auto r = check_lemma_2adic(J);
    CHECK(r.holds);
    int64_t M = int64_t{1} << J;
    for (int64_t n = 0; n < M; n++) {
      auto& w = r.witness[static_cast<size_t>(n)];
      if (n % (M / 2) == 0) {
        CHECK(w[0] == -1);
        continue;
      }
      REQUIRE(w[0] >= 0);
      // verify the witness from the definitions
      CHECK(mod_pos(w[0] + w[2] - n, M) == 0);
      CHECK(w[1] <= J - 3);
      CHECK(w[3] <= J - 3);
      CHECK(mod_pos(w[0] - (int64_t{1} << w[1]), int64_t{1} << (w[1] + 2)) == 0);
      CHECK(mod_pos(w[2] - (int64_t{1} << w[3]), int64_t{1} << (w[3] + 2)) == 0);
    }
  }
}

TEST_CASE("mod 27 lemma") {
  auto d = check_lemma_27(2);
  REQUIRE(d.has_value());
  CHECK(d->a1 == 9);
  CHECK(d->a2 == 20);
  CHECK_FALSE(check_lemma_27(3).has_value());
  CHECK_FALSE(check_lemma_27(6).has_value());
  int decomposed = 0;
  for (int m = 0; m < 27; m++) {
    auto r = check_lemma_27(m);
    if (m % 9 == 3 || m % 9 == 6) {
      CHECK_FALSE(r.has_value());
      continue;
    }
    REQUIRE(r.has_value());
    decomposed++;
    CHECK((r->a1 + r->a2) % 27 == m);
    for (auto [a, w] : {std::pair{r->a1, r->w1}, std::pair{r->a2, r->w2}}) {
      CHECK((w[0] * w[0] + w[1] * w[1]) % 27 == a);
      CHECK(a % 27 != 0);
      int r9 = a % 9;
      CHECK((r9 == 0 || r9 == 2 || r9 == 5 || r9 == 8));
    }
  }
  CHECK(decomposed == 21);
}

TEST_CASE("mod 27 obstruction is real") { CHECK(check_mod27_obstruction()); }

TEST_CASE("goldbach residue decomposition") {
  auto M = build_W(5, 13);
  auto [B1, B2] = decompose_goldbach_residue(4, M);
  CHECK(mod_pos(B1 + B2 - 4, M.W) == 0);
  CHECK(is_amenable({M.W, B1}).amenable);
  CHECK(is_amenable({M.W, B2}).amenable);

  CHECK_THROWS_AS(decompose_goldbach_residue(3, M), std::invalid_argument);
  CHECK_THROWS_AS(decompose_goldbach_residue(2 + (int64_t{1} << 5) * 9, M),
                  std::invalid_argument);  // = 2 mod 2^J (and even, not 5,8 mod 9)
  CHECK_THROWS_AS(decompose_goldbach_residue(14, M), std::invalid_argument);  // 14 = 5 mod 9

  std::mt19937_64 rng(12345);
  int done = 0;
  while (done < 1000) {
    int64_t m = 2 * static_cast<int64_t>(rng() % 1'000'000'000);
    int64_t r9 = mod_pos(m, 9);
    if (r9 == 5 || r9 == 8 || mod_pos(m, 32) == 2) continue;
    auto [C1, C2] = decompose_goldbach_residue(m, M);
    CHECK(mod_pos(C1 + C2 - m, M.W) == 0);
    CHECK(is_amenable({M.W, C1}).amenable);
    CHECK(is_amenable({M.W, C2}).amenable);
    done++;
  }
}

TEST_CASE("residue set Q") {
  auto r1 = residue_set_Q(1, 4320, 5);
  CHECK(r1.members == std::vector<int64_t>{0});

  auto r17 = residue_set_Q(17, 4320, 5);
  CHECK(r17.members.size() == 16);
  CHECK(r17.formula_cardinality == 16);
  CHECK(r17.formula_matches);

  // p | W is excluded from the product: Q = 7*17 with 7 | W
  auto M = build_W(5, 13);
  auto r = residue_set_Q(7 * 17, M.W, 37);
  CHECK(r.formula_cardinality == 7 * 16);
  CHECK(r.formula_matches);

  // 100 random (Q,b) with Wn+b amenable: formula exact
  std::mt19937_64 rng(999);
  int done = 0;
  while (done < 100) {
    int64_t b = 2 + static_cast<int64_t>(rng() % (M.W - 2));
    if (!is_amenable({M.W, b}).amenable) continue;
    int64_t Q = 2 + static_cast<int64_t>(rng() % 400);
    auto rs = residue_set_Q(Q, M.W, b);
    CHECK(rs.formula_matches);
    done++;
  }
}

TEST_CASE("exponential sum bound") {
  auto M = build_W(5, 13);
  auto q1 = residue_set_Q(1, M.W, 37);
  auto e1 = check_expsum_bound(q1, 13);
  CHECK(e1.max_ratio == 0);
  CHECK(e1.within_bound);

  auto q29 = residue_set_Q(29, M.W, 37);
  auto e29 = check_expsum_bound(q29, 13);
  CHECK(e29.within_bound);
  CHECK(e29.max_ratio <= 1.0 / std::sqrt(13.0) + 1e-12);

  auto q493 = residue_set_Q(17 * 29, M.W, 37);
  auto e493 = check_expsum_bound(q493, 13);
  CHECK(e493.within_bound);
}
