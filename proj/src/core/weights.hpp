// weights: the three combinatorial sieve-weight supports, Moebius-restricted
// weights, and the constructive factorization (split) algorithms with an
// exhaustive fallback that turns the underlying lemmas into testable claims.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qs {

enum class SupportKind { LIN_PLUS, SEM_MINUS, SEM_PLUS };

struct SieveSupport {
  SupportKind kind = SupportKind::LIN_PLUS;
  double x = 1e6;
  double rho = 0;    // level exponent; defaulted from kind/theta/eps
  double z = 0;      // sifting parameter; defaulted from kind
  double theta = 0;  // in [0, 1/30]
  double eps = 0.01;
  bool rho_custom = false;  // user-supplied rho (flagged, must be sane)
};

// rho/z defaults: LIN_PLUS rho = (1-4theta)/2 - eps, z = x^(1/2);
// SEM_MINUS rho = (3/7)(1-4theta) - eps, z = x^(1/3 - 2theta - 2eps^2);
// SEM_PLUS rho = (2/5)(1-4theta) - eps, z = x^(1/2)
SieveSupport make_support(SupportKind kind, double x, double theta, double eps,
                          std::optional<double> z = std::nullopt,
                          std::optional<double> rho = std::nullopt);

struct LemmaViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool in_support(const SieveSupport& S, uint64_t d);
int weight(const SieveSupport& S, uint64_t d);  // mu(d) on the support, else 0

struct SplitResult {
  uint64_t d = 1, d1 = 1, d2 = 1;
  double D = 1;
  bool fallback_used = false;
};

SplitResult split_linear(const SieveSupport& S, uint64_t d, double D);
SplitResult split_semilinear(const SieveSupport& S, uint64_t d, double D);
bool split_invariants_hold(const SieveSupport& S, const SplitResult& r);

std::vector<uint64_t> enumerate_support(const SieveSupport& S);  // ascending

// float guard for non-strict threshold comparisons
inline bool leq_guarded(double a, double b) { return a <= b * (1 + 1e-12) + 1e-300; }

}  // namespace qs
