// analytic: singular product, sieve functions f/F, truncated Euler products,
// the integrals I1/I2 and the H(rho1, rho2, sigma) predicate.
#pragma once

#include <cstdint>
#include <functional>

#include "core/forms.hpp"
#include "core/rat.hpp"

namespace qs {

// Euler-Mascheroni constant, 30 digits (classical value, OEIS A001620).
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

struct QuadratureResult {
  double value = 0;
  double abs_error_estimate = 0;
  long evaluations = 0;
  bool converged = true;
};

// adaptive Gauss-Kronrod (G7,K15) on [a,b]
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol);

QuadratureResult I1(double rho2, double sigma, double tol);
double I1_closed(double rho2, double sigma);
QuadratureResult I2(double rho1, double sigma, double tol);
double I2_oracle_midpoint(double rho1, double sigma, long n = 10'000'000);

struct HParams {
  double rho1 = 0.5, rho2 = 3.0 / 7, sigma = 3;
};
struct HResult {
  bool holds = false;
  double margin = 0;  // I1 - I2 - 1e-10
  QuadratureResult i1, i2;
  bool params_in_box = true;  // 1/3 < rho2 < rho1 < 1/2 and sigma in (3,4); soft
};
HResult check_H(const HParams& p, double tol);

double sieve_f(double s);  // sqrt(e^gamma/(pi s)) * int_1^s dt/sqrt(t(t-1))
double sieve_F(double s);  // 2 e^gamma / s

// Exact singular product; the local factors are 1 for p not dividing K, so the
// product collapses to p | K. Returns 0 when some p | K sifts every class.
rational singular_product(const LinearForm& L);
// one local factor, exposed for the collapse test (p need not divide K)
rational singular_local_factor(const LinearForm& L, int64_t p);

struct EulerProducts {
  double P_trunc = 0;
  double A = 0;      // (1/(2 sqrt 2)) prod_{p=-1 mod 4} (1-1/p^2)^(1/2)
  double C41 = 0;    // prod_{p=1 mod 4} (1-1/(p-1)^2)
  double C4m1 = 0;   // prod_{p=-1 mod 4} (1-1/(p-1)^2)
  double A_C4m1 = 0;
};
EulerProducts euler_products(double P_trunc);

rational V_K_SEM(double z, int64_t K);                // finite, exact
rational V_K_LIN(double z, int64_t K, int64_t ell);   // finite, exact
rational frak_f(uint64_t d);                          // prod_{p|d, p>2} (1-1/(p-1))^{-1}

}  // namespace qs
