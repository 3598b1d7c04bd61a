#include "core/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "core/arith.hpp"
#include "core/forms.hpp"

namespace qs {

GoldbachReport goldbach_scan(uint64_t N, bool ternary) {
  if (N < 4) throw std::invalid_argument("goldbach_scan: N >= 4 required");
  if (N > (ternary ? 1'000'000ull : 100'000'000ull))
    throw std::invalid_argument("goldbach_scan: N above desk scale");
  GoldbachReport rep;
  rep.N = N;
  rep.ternary = ternary;
  PrimeTable pt(N);
  auto mp = mask_P(pt, N);
  std::vector<uint64_t> plist;
  for (uint64_t n = 2; n <= N; n++)
    if (mp[n]) plist.push_back(n);

  rep.rep_counts.assign(N + 1, 0);
  uint64_t admissible = 0, exc = 0;
  uint64_t next_decade = 1000;
  uint64_t s3_limit = std::min<uint64_t>(N, 100'000);
  for (uint64_t n = 4; n <= N; n += 2) {
    uint64_t r9 = n % 9;
    if (r9 == 5 || r9 == 8) {
      // any representation must use a summand 3
      if (n <= s3_limit)
        for (uint64_t p : plist) {
          if (2 * p > n) break;
          if (p != 3 && mp[n - p] && n - p != 3) rep.summand3_ok = false;
        }
    } else {
      uint32_t c = 0;
      for (uint64_t p : plist) {
        if (2 * p > n) break;
        if (mp[n - p]) c++;
      }
      rep.rep_counts[n] = c;
      admissible++;
      if (c == 0) {
        rep.exceptions.push_back(n);
        exc++;
      }
    }
    while (next_decade <= N && (n + 2 > N || n + 2 > next_decade)) {
      if (next_decade >= 1000)
        rep.density_by_decade.push_back({next_decade, admissible, exc,
                                         static_cast<double>(exc) / static_cast<double>(admissible)});
      next_decade *= 10;
    }
  }

  if (ternary) {
    std::vector<uint8_t> can2(N + 1, 0);
    for (size_t i = 0; i < plist.size(); i++) {
      if (2 * plist[i] > N) break;
      for (size_t j = i; j < plist.size(); j++) {
        uint64_t s = plist[i] + plist[j];
        if (s > N) break;
        can2[s] = 1;
      }
    }
    for (uint64_t n = 3; n <= N; n += 2) {
      bool found = false;
      for (uint64_t r : plist) {
        if (r >= n) break;
        if (can2[n - r]) {
          found = true;
          break;
        }
      }
      if (!found) rep.ternary_exceptions.push_back(n);
    }
  }
  return rep;
}

std::vector<DyadicSummary> normalized_rep_statistic(const GoldbachReport& rep, uint64_t lo,
                                                    uint64_t hi) {
  std::vector<DyadicSummary> out;
  if (lo >= hi) return out;
  hi = std::min<uint64_t>(hi, rep.N + 1);
  uint64_t block_lo = uint64_t{1} << static_cast<int>(std::floor(std::log2(std::max<uint64_t>(lo, 2))));
  for (uint64_t bl = block_lo; bl < hi; bl <<= 1) {
    uint64_t a = std::max(lo, bl), b = std::min(hi, bl << 1);
    if (a >= b) continue;
    std::vector<double> vals;
    for (uint64_t n = a + (a % 2); n < b; n += 2) {
      uint64_t r9 = n % 9;
      if (r9 == 5 || r9 == 8 || n < 4) continue;
      double ln = std::log(static_cast<double>(n));
      vals.push_back(static_cast<double>(rep.rep_counts[n]) * ln * ln * ln /
                     static_cast<double>(n));
    }
    if (vals.empty()) continue;
    std::sort(vals.begin(), vals.end());
    auto at = [&](double t) {
      return vals[static_cast<size_t>(t * static_cast<double>(vals.size() - 1))];
    };
    out.push_back({a, b, vals.size(), at(0.25), at(0.5), at(0.75)});
  }
  return out;
}

uint64_t ap3_count(uint64_t N) {
  if (N > 1'000'000) throw std::invalid_argument("ap3_count: N above desk scale");
  PrimeTable pt(std::max<uint64_t>(N, 2));
  auto m = mask_Pstar(pt, N);
  std::vector<uint64_t> list;
  for (uint64_t n = 2; n <= N; n++)
    if (m[n]) list.push_back(n);
  uint64_t count = 0;
  for (uint64_t b : list)
    for (uint64_t p : list) {
      if (p >= b) break;
      uint64_t c = 2 * b - p;
      if (c <= N && m[c]) count++;
    }
  return count;
}

uint64_t ap3_count_bruteforce(uint64_t N) {
  PrimeTable pt(std::max<uint64_t>(N, 2));
  auto m = mask_Pstar(pt, N);
  std::vector<uint64_t> list;
  for (uint64_t n = 2; n <= N; n++)
    if (m[n]) list.push_back(n);
  uint64_t count = 0;
  for (size_t i = 0; i < list.size(); i++)
    for (size_t j = i + 1; j < list.size(); j++)
      for (size_t k = j + 1; k < list.size(); k++)
        if (list[i] + list[k] == 2 * list[j]) count++;
  return count;
}

std::vector<AlphapCheckpoint> alphap_scan(double xi, double kappa, double theta, uint64_t N) {
  if (!(theta > 0 && theta < 1)) throw std::invalid_argument("alphap_scan: theta in (0,1)");
  std::vector<uint64_t> checkpoints;
  for (uint64_t c = 10'000; c <= N; c *= 10) checkpoints.push_back(c);
  if (checkpoints.empty() || checkpoints.back() != N) checkpoints.push_back(N);
  PrimeTable pt(N);
  std::vector<AlphapCheckpoint> out;
  std::vector<double> fracs;
  uint64_t qual = 0, primes = 0;
  size_t ci = 0;
  auto flush = [&](uint64_t cp) {
    std::vector<double> s = fracs;
    std::sort(s.begin(), s.end());
    double disc = 0;
    for (size_t i = 0; i < s.size(); i++) {
      double lo = static_cast<double>(i) / static_cast<double>(s.size());
      double hi = static_cast<double>(i + 1) / static_cast<double>(s.size());
      disc = std::max({disc, std::abs(s[i] - lo), std::abs(s[i] - hi)});
    }
    out.push_back({cp, qual, primes, disc});
  };
  pt.for_each_prime(2, N, [&](uint64_t p) {
    while (ci < checkpoints.size() && p > checkpoints[ci]) flush(checkpoints[ci++]);
    double pd = static_cast<double>(p);
    double v = xi * pd + kappa;
    double f = v - std::floor(v);
    double dist = std::min(f, 1 - f);
    if (dist <= std::pow(pd, -theta)) qual++;
    double fx = xi * pd - std::floor(xi * pd);
    fracs.push_back(fx);
    primes++;
  });
  while (ci < checkpoints.size()) flush(checkpoints[ci++]);
  return out;
}

ArcClass classify_arc(double alpha, uint64_t N, uint64_t Q, double A) {
  if (N < 3) throw std::invalid_argument("classify_arc: N >= 3 required");
  double qmax = static_cast<double>(N) / std::log(static_cast<double>(N));
  double x = alpha;
  int64_t a0 = static_cast<int64_t>(std::floor(x));
  int64_t h0 = 1, h1 = a0;
  uint64_t k0 = 0, k1 = 1;
  double frac = x - std::floor(x);
  for (int it = 0; it < 64 && frac > 1e-15; it++) {
    x = 1.0 / frac;
    int64_t ai = static_cast<int64_t>(std::floor(x));
    frac = x - std::floor(x);
    uint64_t k2 = static_cast<uint64_t>(ai) * k1 + k0;
    if (static_cast<double>(k2) > qmax) break;
    int64_t h2 = ai * h1 + h0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  ArcClass arc;
  arc.alpha = alpha;
  arc.a = h1;
  arc.q = k1;
  arc.err = std::abs(alpha - static_cast<double>(h1) / static_cast<double>(k1));
  uint64_t q2m = (Q % arc.q) * (Q % arc.q) % arc.q;
  uint64_t g = std::gcd(arc.q, q2m == 0 ? arc.q : q2m);
  if (Q % arc.q == 0)
    arc.classification = "major";
  else if (static_cast<double>(arc.q / g) >= std::pow(std::log(static_cast<double>(N)), A))
    arc.classification = "minor";
  else
    arc.classification = "unclassified";
  return arc;
}

double von_mangoldt(uint64_t n) {
  if (n < 2) return 0;
  auto f = factorize(n);
  return f.factors.size() == 1 ? std::log(static_cast<double>(f.factors[0].first)) : 0.0;
}

namespace {

std::complex<double> lambda_term(uint64_t n, double alpha) {
  double ang = 2 * std::numbers::pi * alpha * static_cast<double>(n);
  double L = von_mangoldt(n);
  return {L * std::cos(ang), L * std::sin(ang)};
}

}  // namespace

BvReport bv_harness(const SieveSupport& S, double alpha, int64_t b, uint64_t N) {
  if (N > 1'000'000) throw std::invalid_argument("bv_harness: N above desk scale");
  if (b == 0) throw std::invalid_argument("bv_harness: b must be nonzero");
  BvReport rep;
  rep.arc = classify_arc(alpha, std::max<uint64_t>(N, 3), 6, 3.0);
  for (uint64_t d : enumerate_support(S)) {
    if (std::gcd(d, static_cast<uint64_t>(b < 0 ? -b : b)) != 1) continue;
    uint64_t bm = static_cast<uint64_t>(mod_pos(b, static_cast<int64_t>(d)));
    std::complex<double> acc = 0;
    uint64_t n0 = N + (bm + d - N % d) % d;
    for (uint64_t n = n0; n < 2 * N; n += d) acc += lambda_term(n, alpha);
    rep.terms.push_back({d, weight(S, d), std::abs(acc)});
    rep.total += std::abs(acc);
  }
  return rep;
}

double bv_oracle(const SieveSupport& S, double alpha, int64_t b, uint64_t N) {
  double level = std::pow(S.x, S.rho);
  double total = 0;
  for (uint64_t d = 1; static_cast<double>(d) <= level * (1 + 1e-12); d++) {
    if (!in_support(S, d)) continue;
    if (std::gcd(d, static_cast<uint64_t>(b < 0 ? -b : b)) != 1) continue;
    uint64_t bm = static_cast<uint64_t>(mod_pos(b, static_cast<int64_t>(d)));
    std::complex<double> acc = 0;
    for (uint64_t n = N; n < 2 * N; n++)
      if (n % d == bm) acc += lambda_term(n, alpha);
    total += std::abs(acc);
  }
  return total;
}

}  // namespace qs
