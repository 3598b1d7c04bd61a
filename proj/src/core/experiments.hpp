// experiments: desk-scale empirical scans — binary/ternary Goldbach over P,
// 3-term APs in P*, alpha-p equidistribution, arc classification, and the
// Lambda(n) e(alpha n) harness over sieve-weight supports.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/weights.hpp"

namespace qs {

struct DecadeDensity {
  uint64_t limit = 0;      // 10^k
  uint64_t admissible = 0; // even n <= limit, n != 5,8 mod 9
  uint64_t exceptions = 0;
  double fraction = 0;
};

struct GoldbachReport {
  uint64_t N = 0;
  bool ternary = false;
  std::vector<uint32_t> rep_counts;       // indexed by n; unordered pairs p <= q (binary)
  std::vector<uint64_t> exceptions;       // even n != 5,8 mod 9 with zero representations
  std::vector<DecadeDensity> density_by_decade;
  bool summand3_ok = true;                // every rep of even n = 5,8 mod 9 uses a 3 (checked <= 1e5)
  std::vector<uint64_t> ternary_exceptions;  // odd n with no p+q+r (ternary mode)
};

// pre: N <= 1e8 binary, 1e6 ternary
GoldbachReport goldbach_scan(uint64_t N, bool ternary);

struct DyadicSummary {
  uint64_t lo = 0, hi = 0;  // block [lo, hi)
  uint64_t count = 0;
  double q1 = 0, median = 0, q3 = 0;
};

// r(n) (log n)^3 / n over even represented n in [lo, hi), per dyadic block
std::vector<DyadicSummary> normalized_rep_statistic(const GoldbachReport& rep, uint64_t lo,
                                                    uint64_t hi);

// nontrivial 3-APs (a, a+d, a+2d), d >= 1, in P* up to N, via middle-element scan
uint64_t ap3_count(uint64_t N);
uint64_t ap3_count_bruteforce(uint64_t N);  // triple loop oracle

struct AlphapCheckpoint {
  uint64_t N = 0;
  uint64_t qualifying = 0;  // p <= N with ||xi p + kappa|| <= p^{-theta}
  uint64_t primes = 0;
  double discrepancy = 0;   // star discrepancy of {xi p} over p <= N
};

// checkpoints at N = 1e4, 1e5, ... up to the limit
std::vector<AlphapCheckpoint> alphap_scan(double xi, double kappa, double theta, uint64_t N);

struct ArcClass {
  double alpha = 0;
  int64_t a = 0;
  uint64_t q = 1;
  double err = 0;  // |alpha - a/q|
  std::string classification;  // "major", "minor", or "unclassified"
};

// last continued-fraction convergent with q <= N/log N; major iff q | Q,
// else minor iff q/(q,Q^2) >= (log N)^A
ArcClass classify_arc(double alpha, uint64_t N, uint64_t Q, double A);

double von_mangoldt(uint64_t n);  // log p at prime powers, else 0

struct BvTerm {
  uint64_t d = 0;
  int mu = 0;
  double abs_sum = 0;  // |sum_{N <= n < 2N, n = b mod d} Lambda(n) e(alpha n)|
};

struct BvReport {
  double total = 0;  // sum over d in support, gcd(d,b)=1, ascending d
  std::vector<BvTerm> terms;
  ArcClass arc;
};

// pre: N <= 1e6; fixed d-ascending, n-ascending summation order
BvReport bv_harness(const SieveSupport& S, double alpha, int64_t b, uint64_t N);
// independent oracle: all d from 1, membership tested per d, all n filtered by n % d
double bv_oracle(const SieveSupport& S, double alpha, int64_t b, uint64_t N);

}  // namespace qs
