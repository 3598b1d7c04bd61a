#include "core/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qs {

uint64_t Factorization::reconstruct() const {
  uint64_t r = 1;
  for (auto [p, e] : factors)
    for (int i = 0; i < e; i++) r *= p;
  return r;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

int v_p(uint64_t n, uint64_t p) {
  int v = 0;
  while (n && n % p == 0) n /= p, v++;
  return v;
}

// ---------------------------------------------------------------- PrimeTable

PrimeTable::PrimeTable(uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("sieve_primes: limit < 2");
  if (limit > (uint64_t{1} << 32)) throw std::invalid_argument("sieve_primes: limit > 2^32");
  uint64_t half = (limit + 1) / 2;  // index i represents 2i+1, largest odd <= limit
  words_.assign((half + 63) / 64, ~uint64_t{0});
  auto clear_bit = [&](uint64_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); };
  clear_bit(0);  // 1 is not prime
  // zero tail bits beyond limit
  for (uint64_t i = half; i < words_.size() * 64; i++) clear_bit(i);

  // base primes up to sqrt(limit) by a small plain sieve
  uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
  while (root * root > limit + 1) root--;
  std::vector<uint8_t> small(root + 1, 1);
  std::vector<uint64_t> base;
  for (uint64_t p = 3; p <= root; p += 2)
    if (small[p]) {
      base.push_back(p);
      for (uint64_t q = p * p; q <= root; q += p) small[q] = 0;
    }

  // segmented marking over odd numbers
  const uint64_t seg = 1 << 20;  // odds per segment
  for (uint64_t lo = 0; lo < half; lo += seg) {
    uint64_t hi = std::min(half, lo + seg);  // indices [lo,hi)
    for (uint64_t p : base) {
      uint64_t start = p * p;            // first odd composite multiple
      uint64_t si = start >> 1;          // its index
      if (si < lo) {
        uint64_t lo_val = 2 * lo + 1;
        uint64_t m = (lo_val + p - 1) / p;
        if (m % 2 == 0) m++;
        if (m < p) m = p;
        si = (m * p) >> 1;
      }
      for (uint64_t i = si; i < hi; i += p) clear_bit(i);
    }
  }
}

bool PrimeTable::is_prime(uint64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeTable::is_prime beyond limit");
  if (n < 2) return false;
  if (n == 2) return true;
  if (n % 2 == 0) return false;
  return odd_bit(n);
}

uint64_t PrimeTable::count() const {
  uint64_t c = limit_ >= 2 ? 1 : 0;
  for (uint64_t w : words_) c += static_cast<uint64_t>(__builtin_popcountll(w));
  return c;
}

std::vector<uint64_t> PrimeTable::primes_upto(uint64_t n) const {
  std::vector<uint64_t> out;
  for_each_prime(2, std::min(n, limit_), [&](uint64_t p) { out.push_back(p); });
  return out;
}

// ------------------------------------------------------------- factorization

static constexpr uint32_t kSpfLimit = 10'000'000;

const std::vector<uint32_t>& spf_table() {
  static std::vector<uint32_t> spf;
  static std::once_flag once;
  std::call_once(once, [] {
    spf.resize(kSpfLimit + 1);
    for (uint32_t i = 0; i <= kSpfLimit; i++) spf[i] = i;
    for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= kSpfLimit; i++)
      if (spf[i] == i)
        for (uint64_t j = static_cast<uint64_t>(i) * i; j <= kSpfLimit; j += i)
          if (spf[j] == j) spf[j] = i;
  });
  return spf;
}

Factorization factorize(uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  uint64_t m = n;
  auto push = [&](uint64_t p) {
    int e = 0;
    while (m % p == 0) m /= p, e++;
    f.factors.emplace_back(p, e);
  };
  if (m <= kSpfLimit) {
    const auto& spf = spf_table();
    while (m > 1) push(spf[m]);
    return f;
  }
  for (uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) push(p);
    if (m <= kSpfLimit) {
      const auto& spf = spf_table();
      while (m > 1) {
        uint64_t q = spf[m];
        push(q);
      }
      return f;
    }
  }
  if (m > 1) push(m);
  return f;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

// ------------------------------------------------------------- predicates

uint64_t s_of(uint64_t n) {
  uint64_t s = 1;
  for (auto [p, e] : factorize(n).factors)
    if (p % 4 == 3 && p != 3) s *= p;
  return s;
}

bool is_sum_two_squares(uint64_t n) {
  if (n == 0) return true;
  for (auto [p, e] : factorize(n).factors)
    if (p % 4 == 3 && e % 2 != 0) return false;
  return true;
}

bool in_S(uint64_t n) {
  if (n == 0) throw std::invalid_argument("in_S: n must be positive");
  int v3 = v_p(n, 3);
  if (v3 % 2 != 0) return false;
  uint64_t residual = n;
  while (residual % 2 == 0) residual /= 2;
  while (residual % 3 == 0) residual /= 3;
  for (auto [p, e] : factorize(residual).factors)
    if (p % 4 != 1) return false;
  return true;
}

bool in_P(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("in_P: argument not prime");
  return is_sum_two_squares(p - 1);
}

bool in_Pstar(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("in_Pstar: argument not prime");
  if (p == 2) return true;  // 1 = 1^2 + 0^2, gcd(1,0)=1
  uint64_t m = p - 1;
  if (m % 4 == 0) return false;
  for (auto [q, e] : factorize(m).factors)
    if (q % 4 == 3) return false;
  return true;
}

// ------------------------------------------------------------- brute force

static bool two_square_witness(uint64_t n, bool coprime_only, bool gcd_6inf) {
  if (n == 0) return !coprime_only || true;  // 0 = 0^2+0^2; gcd(0,0)=0 treated as fine
  for (uint64_t a = 0; a * a <= n; a++) {
    uint64_t rem = n - a * a;
    uint64_t b = static_cast<uint64_t>(std::sqrt(static_cast<double>(rem)));
    while (b * b > rem) b--;
    while ((b + 1) * (b + 1) <= rem) b++;
    if (b * b != rem) continue;
    if (coprime_only) {
      if (std::gcd(a, b) == 1) return true;
    } else if (gcd_6inf) {
      uint64_t g = std::gcd(a, b);
      if (g == 0) g = 1;  // a=b=0 only for n=0
      while (g % 2 == 0) g /= 2;
      while (g % 3 == 0) g /= 3;
      if (g == 1) return true;
    } else {
      return true;
    }
  }
  return false;
}

bool is_sum_two_squares_bruteforce(uint64_t n) { return two_square_witness(n, false, false); }
bool in_S_bruteforce(uint64_t n) { return two_square_witness(n, false, true); }

bool in_P_bruteforce(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("in_P_bruteforce: argument not prime");
  return two_square_witness(p - 1, false, false);
}

bool in_Pstar_bruteforce(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("in_Pstar_bruteforce: argument not prime");
  return two_square_witness(p - 1, true, false);
}

// ------------------------------------------------------------- masks

std::vector<uint8_t> mask_P(const PrimeTable& pt, uint64_t limit) {
  std::vector<uint8_t> mask(limit + 1, 0);
  pt.for_each_prime(2, limit, [&](uint64_t p) {
    if (is_sum_two_squares(p - 1)) mask[p] = 1;
  });
  return mask;
}

std::vector<uint8_t> mask_Pstar(const PrimeTable& pt, uint64_t limit) {
  std::vector<uint8_t> mask(limit + 1, 0);
  pt.for_each_prime(2, limit, [&](uint64_t p) {
    if (in_Pstar(p)) mask[p] = 1;
  });
  return mask;
}

}  // namespace qs
