// arith: prime generation, factorization, and the quadratic-form membership
// predicates used everywhere else (two-squares criterion, S-set, P / P*, s(n)).
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qs {

struct Factorization {
  uint64_t n = 1;
  std::vector<std::pair<uint64_t, int>> factors;  // (prime, exponent), primes increasing

  uint64_t reconstruct() const;
};

// Odd-only bit-packed sieve, built segment by segment so limit=1e9 stays cheap.
class PrimeTable {
 public:
  explicit PrimeTable(uint64_t limit);

  uint64_t limit() const { return limit_; }
  bool is_prime(uint64_t n) const;
  uint64_t count() const;  // number of primes <= limit
  std::vector<uint64_t> primes_upto(uint64_t n) const;

  template <class F>
  void for_each_prime(uint64_t lo, uint64_t hi, F&& f) const {
    if (lo <= 2 && 2 <= hi) f(uint64_t{2});
    uint64_t start = std::max<uint64_t>(lo | 1, 3);
    for (uint64_t n = start; n <= hi; n += 2)
      if (odd_bit(n)) f(n);
  }

 private:
  bool odd_bit(uint64_t n) const {  // n odd, >= 3
    uint64_t i = n >> 1;
    return words_[i >> 6] >> (i & 63) & 1;
  }
  uint64_t limit_;
  std::vector<uint64_t> words_;  // bit i set <=> 2i+1 is prime (bit 0 cleared)
};

// Factorization helpers. A process-wide smallest-prime-factor table (up to 1e7)
// backs the bulk scans; larger inputs fall back to trial division.
Factorization factorize(uint64_t n);
const std::vector<uint32_t>& spf_table();  // size 1e7+1
bool is_prime_u64(uint64_t n);

uint64_t s_of(uint64_t n);                 // squarefree product of p|n, p = -1 mod 4, p != 3
bool is_sum_two_squares(uint64_t n);       // factorization criterion
bool in_S(uint64_t n);                     // v3(n) even and residual has all factors = 1 mod 4
bool in_P(uint64_t p);                     // p prime with p-1 a sum of two squares
bool in_Pstar(uint64_t p);                 // p-1 a sum of two coprime squares

// Brute-force oracles (definitional enumerations), used by tests/acceptance.
bool is_sum_two_squares_bruteforce(uint64_t n);
bool in_S_bruteforce(uint64_t n);      // exists a,b: a^2+b^2=n, gcd(a,b) | 6^inf
bool in_P_bruteforce(uint64_t p);      // enumerate (x,y) with x^2+y^2 = p-1
bool in_Pstar_bruteforce(uint64_t p);  // same with gcd(x,y)=1

// Dense membership masks over [0,limit] (index by n), for bulk experiments.
std::vector<uint8_t> mask_P(const PrimeTable& pt, uint64_t limit);
std::vector<uint8_t> mask_Pstar(const PrimeTable& pt, uint64_t limit);

int v_p(uint64_t n, uint64_t p);  // p-adic valuation
uint64_t gcd_u64(uint64_t a, uint64_t b);

}  // namespace qs
