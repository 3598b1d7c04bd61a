#include "core/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/arith.hpp"

namespace qs {

SieveSupport make_support(SupportKind kind, double x, double theta, double eps,
                          std::optional<double> z, std::optional<double> rho) {
  if (x <= 1) throw std::invalid_argument("make_support: x > 1 required");
  if (theta < 0 || theta > 1.0 / 30) throw std::invalid_argument("make_support: theta out of [0,1/30]");
  if (eps <= 0) throw std::invalid_argument("make_support: eps > 0 required");
  SieveSupport S;
  S.kind = kind;
  S.x = x;
  S.theta = theta;
  S.eps = eps;
  double base = 1 - 4 * theta;
  switch (kind) {
    case SupportKind::LIN_PLUS: S.rho = base / 2 - eps; break;
    case SupportKind::SEM_MINUS: S.rho = 3.0 / 7 * base - eps; break;
    case SupportKind::SEM_PLUS: S.rho = 2.0 / 5 * base - eps; break;
  }
  if (rho) {
    S.rho = *rho;
    S.rho_custom = true;
  }
  if (z)
    S.z = *z;
  else
    S.z = kind == SupportKind::SEM_MINUS
              ? std::pow(x, 1.0 / 3 - 2 * theta - 2 * eps * eps)
              : std::sqrt(x);
  if (S.rho <= 0 || S.z <= 2) throw std::invalid_argument("make_support: degenerate rho or z");
  return S;
}

// descending prime list of a squarefree d, or nullopt when not squarefree
static std::optional<std::vector<uint64_t>> squarefree_primes_desc(uint64_t d) {
  std::vector<uint64_t> ps;
  for (auto [p, e] : factorize(d).factors) {
    if (e > 1) return std::nullopt;
    ps.push_back(p);
  }
  std::reverse(ps.begin(), ps.end());
  return ps;
}

// chain condition at (1-based) position r0 applies to: LIN_PLUS odd r0 with
// exponent 3; SEM_MINUS even r0 with exponent 2; SEM_PLUS odd r0 with
// exponent 2. prefix = product of the first r0-1 primes.
static bool chain_ok(SupportKind kind, uint64_t prefix, uint64_t p, size_t r0, double level) {
  int e = 0;
  bool odd = r0 % 2 == 1;
  switch (kind) {
    case SupportKind::LIN_PLUS: e = odd ? 3 : 0; break;
    case SupportKind::SEM_MINUS: e = odd ? 0 : 2; break;
    case SupportKind::SEM_PLUS: e = odd ? 2 : 0; break;
  }
  if (e == 0) return true;
  __int128 v = prefix;
  for (int i = 0; i < e; i++) v *= p;
  return leq_guarded(static_cast<double>(v), level);
}

bool in_support(const SieveSupport& S, uint64_t d) {
  if (d == 0) throw std::invalid_argument("in_support: d must be positive");
  if (d == 1) return true;
  double level = std::pow(S.x, S.rho);
  if (!leq_guarded(static_cast<double>(d), level)) return false;
  auto ps = squarefree_primes_desc(d);
  if (!ps) return false;
  for (uint64_t p : *ps)
    if (!(static_cast<double>(p) < S.z * (1 + 1e-12))) return false;
  uint64_t prefix = 1;
  for (size_t i = 0; i < ps->size(); i++) {
    if (!chain_ok(S.kind, prefix, (*ps)[i], i + 1, level)) return false;
    prefix *= (*ps)[i];
  }
  return true;
}

int weight(const SieveSupport& S, uint64_t d) {
  if (!in_support(S, d)) return 0;
  return factorize(d).factors.size() % 2 == 0 ? 1 : -1;
}

bool split_invariants_hold(const SieveSupport& S, const SplitResult& r) {
  if (r.d1 * r.d2 != r.d) return false;
  if (std::gcd(r.d1, r.d2) != 1) return false;
  if (!leq_guarded(static_cast<double>(r.d1), r.D)) return false;
  double cap = std::pow(S.x, 1 - 4 * S.theta - 2 * S.eps * S.eps) / r.D;
  __int128 v = static_cast<__int128>(r.d1) * r.d2 * r.d2;
  if (!leq_guarded(static_cast<double>(v), cap)) return false;
  double x01 = std::pow(S.x, 0.1);
  if (!(static_cast<double>(r.d1) >= x01 * (1 - 1e-12)) && r.d2 != 1) return false;
  return true;
}

static std::optional<SplitResult> exhaustive_split(const SieveSupport& S, uint64_t d, double D) {
  auto ps = squarefree_primes_desc(d);
  if (!ps) return std::nullopt;
  size_t r = ps->size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << r); mask++) {
    uint64_t d1 = 1;
    for (size_t i = 0; i < r; i++)
      if (mask >> i & 1) d1 *= (*ps)[i];
    SplitResult res{d, d1, d / d1, D, true};
    if (split_invariants_hold(S, res)) return res;
  }
  return std::nullopt;
}

SplitResult split_linear(const SieveSupport& S, uint64_t d, double D) {
  if (S.kind != SupportKind::LIN_PLUS) throw std::invalid_argument("split_linear: wrong kind");
  if (!in_support(S, d)) throw std::invalid_argument("split_linear: d not in support");
  auto ps = *squarefree_primes_desc(d);
  double x01 = std::pow(S.x, 0.1);
  SplitResult res{d, 1, 1, D, false};
  for (uint64_t p : ps) {
    if (static_cast<double>(res.d1) < x01)
      res.d1 *= p;
    else if (leq_guarded(static_cast<double>(res.d1) * static_cast<double>(p), D))
      res.d1 *= p;
    else
      res.d2 *= p;
  }
  if (split_invariants_hold(S, res)) return res;
  if (auto fb = exhaustive_split(S, d, D)) return *fb;
  throw LemmaViolation("split_linear: no valid split exists for d=" + std::to_string(d));
}

SplitResult split_semilinear(const SieveSupport& S, uint64_t d, double D) {
  if (S.kind == SupportKind::LIN_PLUS) throw std::invalid_argument("split_semilinear: wrong kind");
  if (!in_support(S, d)) throw std::invalid_argument("split_semilinear: d not in support");
  SplitResult res{d, 1, 1, D, false};
  if (leq_guarded(static_cast<double>(d), D)) {
    res.d1 = d;
  } else {
    auto ps = *squarefree_primes_desc(d);
    uint64_t prefix = 1;
    size_t j = 0;
    while (j < ps.size() && leq_guarded(static_cast<double>(prefix) * static_cast<double>(ps[j]), D))
      prefix *= ps[j], j++;
    res.d1 = prefix;
    res.d2 = d / prefix;
  }
  if (split_invariants_hold(S, res)) return res;
  if (auto fb = exhaustive_split(S, d, D)) return *fb;
  throw LemmaViolation("split_semilinear: no valid split exists for d=" + std::to_string(d));
}

static void enumerate_rec(const SieveSupport& S, const std::vector<uint64_t>& primes_desc,
                          size_t from, uint64_t product, size_t r, double level,
                          std::vector<uint64_t>& out) {
  for (size_t i = from; i < primes_desc.size(); i++) {
    uint64_t p = primes_desc[i];
    double nd = static_cast<double>(product) * static_cast<double>(p);
    if (!leq_guarded(nd, level)) continue;  // smaller primes may still fit
    if (!chain_ok(S.kind, product, p, r + 1, level)) continue;
    uint64_t np = product * p;
    out.push_back(np);
    enumerate_rec(S, primes_desc, i + 1, np, r + 1, level, out);
  }
}

std::vector<uint64_t> enumerate_support(const SieveSupport& S) {
  double level = std::pow(S.x, S.rho);
  if (level > 1e7) throw std::length_error("enumerate_support: x^rho above desk scale 1e7");
  uint64_t pmax = static_cast<uint64_t>(std::min(level, S.z) + 2);
  PrimeTable pt(std::max<uint64_t>(pmax, 3));
  std::vector<uint64_t> primes_desc;
  pt.for_each_prime(2, pmax, [&](uint64_t p) {
    if (static_cast<double>(p) < S.z * (1 + 1e-12) && leq_guarded(static_cast<double>(p), level))
      primes_desc.push_back(p);
  });
  std::reverse(primes_desc.begin(), primes_desc.end());
  std::vector<uint64_t> out{1};
  enumerate_rec(S, primes_desc, 0, 1, 0, level, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qs
