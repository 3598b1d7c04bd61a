// envelope: Selberg-type enveloping sieve for primes Wn+B = x^2+y^2+1.
// Exact rational tables h, G_d, rho_d, rho*_l, beta(n), and the Fourier
// coefficients v(a/q) of the finite expansion
//   beta(n) = sum_{q <= z^2} sum_{a in Z_q^x} v(a/q) e(-an/q).
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/rat.hpp"

namespace qs {

struct EnvelopeModel {
  int64_t W = 0, B = 0;
  int64_t w = 0;
  double z = 0;
  uint64_t N = 0;                  // window [0, N)
  std::vector<uint64_t> primes;    // sifting primes in (w, z)
  std::vector<uint64_t> divisors;  // squarefree products of sifting primes, <= z^2, sorted
  std::map<uint64_t, rational> h;          // multiplicative, h(p) = omega/(p-omega)
  std::map<uint64_t, rational> G;          // G_d(z), d <= z (zero above)
  rational G1 = 0;
  std::map<uint64_t, rational> rho;        // mu(d) G_d / G1
  std::map<uint64_t, rational> rho_star_;  // dual coefficients
  std::map<uint64_t, rational> lcm_mass;   // M(D) = sum_{[d1,d2]=D} rho*_{d1} rho*_{d2}
  std::map<uint64_t, std::vector<uint64_t>> sifted_n;  // per prime: n-classes of A_p pulled back
};

// omega(p) for a sifting prime (p > w assumed): 1 if p = 1 mod 4 else 2
int envelope_omega(uint64_t p);

// pre: Wn+B amenable; squarefree divisor count <= 10^6
EnvelopeModel build_envelope(int64_t W, int64_t B, int64_t w, double z, uint64_t N);

// beta(n) = G1 (sum_{d | P(z), Wn+B in A_d} rho_d)^2, exact
rational beta_at(const EnvelopeModel& m, uint64_t n);

// true when only d = 1 contributes, i.e. beta(n) = G1 exactly
bool beta_is_trivial_at(const EnvelopeModel& m, uint64_t n);

// window average (1/N) sum_{n<N} beta(n), the measured kappa_2
rational beta_window_average(const EnvelopeModel& m);

// rho*_l; throws std::invalid_argument when l does not divide P(z)
rational rho_star(const EnvelopeModel& m, uint64_t ell);

// exact rational prefactor R(q) with v(a/q) = R(q) * sum_{b in K_q} e(ab/q);
// zero for q not a squarefree product of sifting primes
rational fourier_prefactor(const EnvelopeModel& m, uint64_t q);

// v(a/q); exact 0 for non-squarefree q or q | W (q != 1); pre gcd(a,q) = 1
std::complex<double> fourier_v(const EnvelopeModel& m, uint64_t a, uint64_t q);

// max |beta(n) - expansion(n)| over the sample
double verify_expansion(const EnvelopeModel& m, const std::vector<uint64_t>& sample);

// versioned text dump / restore (exact rationals as num/den)
std::string envelope_dump(const EnvelopeModel& m);
EnvelopeModel envelope_restore(const std::string& text);

}  // namespace qs
