#include "core/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "core/arith.hpp"

namespace qs {

// ------------------------------------------------------------- quadrature

namespace {

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 uses the
// odd-indexed abscissae.
constexpr double kXK[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEval {
  double k15 = 0, g7 = 0;
};

PanelEval eval_panel(const std::function<double(double)>& f, double a, double b, long& evals) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fk = 0, fg = 0;
  for (int i = 0; i < 8; i++) {
    double v;
    if (i == 7) {
      v = f(c);
      evals++;
      fk += kWK[i] * v;
      fg += kWG[3] * v;
    } else {
      double v1 = f(c - h * kXK[i]), v2 = f(c + h * kXK[i]);
      evals += 2;
      fk += kWK[i] * (v1 + v2);
      if (i % 2 == 1) fg += kWG[i / 2] * (v1 + v2);
    }
  }
  return {fk * h, fg * h};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           QuadratureResult& out) {
  long evals = 0;
  auto p = eval_panel(f, a, b, evals);
  out.evaluations += evals;
  double err = std::abs(p.k15 - p.g7);
  if (err <= tol || depth >= 40) {
    out.value += p.k15;
    out.abs_error_estimate += err;
    if (err > tol) out.converged = false;
    return;
  }
  double c = 0.5 * (a + b);
  adapt(f, a, c, tol / 2, depth + 1, out);
  adapt(f, c, b, tol / 2, depth + 1, out);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  QuadratureResult out;
  if (a == b) return out;
  adapt(f, a, b, tol, 0, out);
  return out;
}

// ------------------------------------------------------------- integrals

QuadratureResult I1(double rho2, double sigma, double tol) {
  double s = rho2 * sigma;
  if (s <= 1) throw std::domain_error("I1: rho2*sigma must exceed 1");
  // t = 1 + u^2 removes the endpoint singularity: dt/sqrt(t(t-1)) = 2 du/sqrt(1+u^2)
  auto g = [](double u) { return 2.0 / std::sqrt(1 + u * u); };
  auto r = integrate(g, 0, std::sqrt(s - 1), tol);
  double c = 1.0 / (2 * std::sqrt(rho2));
  r.value *= c;
  r.abs_error_estimate *= c;
  return r;
}

double I1_closed(double rho2, double sigma) {
  double s = rho2 * sigma;
  if (s <= 1) throw std::domain_error("I1_closed: rho2*sigma must exceed 1");
  return std::log(std::sqrt(s) + std::sqrt(s - 1)) / std::sqrt(rho2);
}

QuadratureResult I2(double rho1, double sigma, double tol) {
  if (sigma <= 2) throw std::domain_error("I2: sigma must exceed 2");
  // t = sigma(1-v^2): log(t-1)/(t sqrt(1-t/sigma)) dt = 2 log(sigma(1-v^2)-1)/(1-v^2) dv
  auto g = [sigma](double v) {
    return 2.0 * std::log(sigma * (1 - v * v) - 1) / (1 - v * v);
  };
  auto r = integrate(g, 0, std::sqrt(1 - 2 / sigma), tol);
  double c = 1.0 / (2 * rho1);
  r.value *= c;
  r.abs_error_estimate *= c;
  return r;
}

double I2_oracle_midpoint(double rho1, double sigma, long n) {
  if (sigma <= 2) throw std::domain_error("I2_oracle: sigma must exceed 2");
  double v0 = std::sqrt(1 - 2 / sigma);
  double h = v0 / static_cast<double>(n);
  double acc = 0;
  for (long i = 0; i < n; i++) {
    double v = (static_cast<double>(i) + 0.5) * h;
    acc += 2.0 * std::log(sigma * (1 - v * v) - 1) / (1 - v * v);
  }
  return acc * h / (2 * rho1);
}

HResult check_H(const HParams& p, double tol) {
  HResult r;
  r.i1 = I1(p.rho2, p.sigma, tol);
  r.i2 = I2(p.rho1, p.sigma, tol);
  r.margin = r.i1.value - r.i2.value - 1e-10;
  r.holds = r.margin > r.i1.abs_error_estimate + r.i2.abs_error_estimate;
  r.params_in_box =
      p.rho2 > 1.0 / 3 && p.rho1 > p.rho2 && p.rho1 <= 0.5 && p.sigma >= 3 && p.sigma <= 4;
  return r;
}

double sieve_f(double s) {
  if (s < 1) throw std::domain_error("sieve_f: s >= 1 required");
  if (s == 1) return 0;
  double core = 2 * std::log(std::sqrt(s) + std::sqrt(s - 1));  // int_1^s dt/sqrt(t(t-1))
  return std::sqrt(std::exp(kEulerGamma) / (M_PI * s)) * core;
}

double sieve_F(double s) {
  if (s <= 0) throw std::domain_error("sieve_F: s > 0 required");
  return 2 * std::exp(kEulerGamma) / s;
}

// ------------------------------------------------------- singular product

rational singular_local_factor(const LinearForm& L, int64_t p) {
  // count of sifted classes; the "two class" branch applies for p = -1 mod 4,
  // p != 3 (p = 3 is kept in the one-class branch, consistent with s(n)
  // omitting 3)
  bool two = p % 4 == 3 && p != 3;
  int64_t count = 0;
  for (int64_t n = 0; n < p; n++) {
    int64_t v = mod_pos(static_cast<int64_t>((static_cast<__int128>(L.K) * n + L.b) % p), p);
    if (v == 0 || (two && v == 1)) count++;
  }
  rational num = rational(p - count, p);
  rational den = rational(p - (two ? 2 : 1), p);
  if (den == 0) throw std::domain_error("singular_local_factor: degenerate normalizer (p=2,3 two-class)");
  return num / den;
}

rational singular_product(const LinearForm& L) {
  if (L.K < 1) throw std::invalid_argument("singular_product: K >= 1 required");
  rational prod = 1;
  for (auto [p, e] : factorize(static_cast<uint64_t>(L.K)).factors)
    prod *= singular_local_factor(L, static_cast<int64_t>(p));
  return prod;
}

// ------------------------------------------------------- Euler products

EulerProducts euler_products(double P_trunc) {
  if (P_trunc < 2 || P_trunc > 1e9) throw std::invalid_argument("euler_products: P_trunc out of range");
  EulerProducts ep;
  ep.P_trunc = P_trunc;
  double logA = 0, logC41 = 0, logC4m1 = 0;
  PrimeTable pt(static_cast<uint64_t>(P_trunc));
  pt.for_each_prime(3, static_cast<uint64_t>(P_trunc), [&](uint64_t p) {
    double pd = static_cast<double>(p);
    if (p % 4 == 3) {
      logA += 0.5 * std::log1p(-1.0 / (pd * pd));
      logC4m1 += std::log1p(-1.0 / ((pd - 1) * (pd - 1)));
    } else {
      logC41 += std::log1p(-1.0 / ((pd - 1) * (pd - 1)));
    }
  });
  ep.A = std::exp(logA) / (2 * std::sqrt(2.0));
  ep.C41 = std::exp(logC41);
  ep.C4m1 = std::exp(logC4m1);
  ep.A_C4m1 = ep.A * ep.C4m1;
  return ep;
}

rational V_K_SEM(double z, int64_t K) {
  rational v = 1;
  if (z <= 3) return v;
  PrimeTable pt(static_cast<uint64_t>(z));
  pt.for_each_prime(3, static_cast<uint64_t>(std::ceil(z)) - 1, [&](uint64_t p) {
    if (static_cast<double>(p) < z && p % 4 == 3 && K % static_cast<int64_t>(p) != 0)
      v *= rational(static_cast<int64_t>(p) - 2, static_cast<int64_t>(p) - 1);
  });
  return v;
}

rational V_K_LIN(double z, int64_t K, int64_t ell) {
  rational v = 1;
  if (z <= 3) return v;
  PrimeTable pt(static_cast<uint64_t>(z));
  pt.for_each_prime(3, static_cast<uint64_t>(std::ceil(z)) - 1, [&](uint64_t p) {
    int64_t pp = static_cast<int64_t>(p);
    if (!(static_cast<double>(p) < z)) return;
    v *= rational(pp - 2, pp - 1);
    if (K % pp == 0 || ell % pp == 0) v /= rational(pp - 2, pp - 1);
  });
  return v;
}

rational frak_f(uint64_t d) {
  rational v = 1;
  for (auto [p, e] : factorize(d).factors)
    if (p > 2) v *= rational(static_cast<int64_t>(p) - 1, static_cast<int64_t>(p) - 2);
  return v;
}

}  // namespace qs
