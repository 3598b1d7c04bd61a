// zfourier: Fourier analysis on Z_N with the normalization
// fhat(xi) = (1/N) sum_n f(n) e(-xi n / N), Bohr sets, a smoothed Bohr-set
// indicator chi with verified pointwise properties, l^r spectral norms, and
// the transference pipeline.
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qs {

using cd = std::complex<double>;

// fhat(xi) = (1/N) sum f(n) e(-xi n/N); radix-2 when N is a power of two,
// direct with trig recurrence otherwise. N <= 2^22.
std::vector<cd> dft(const std::vector<cd>& f);
// f(n) = sum_xi fhat(xi) e(xi n/N)
std::vector<cd> idft(const std::vector<cd>& fh);

// f*g(n) = (1/N) sum_k f(k) g(n-k), computed spectrally
std::vector<cd> convolve(const std::vector<cd>& f, const std::vector<cd>& g);
// the same by the defining double loop (oracle path)
std::vector<cd> convolve_direct(const std::vector<cd>& f, const std::vector<cd>& g);

// sum_xi |fhat(xi)|^r
double lr_norm(const std::vector<cd>& f, double r);

struct BohrSpec {
  uint64_t N = 0;
  std::vector<uint64_t> Omega;  // frequencies in Z_N
  double eta = 0;               // in (0, 1/2)
};

// ||xi n / N|| as min(r, N-r)/N with r = xi*n mod N (exact in the lattice)
double circle_dist(uint64_t xi, uint64_t n, uint64_t N);

// exact membership mask of B(Omega, eta)
std::vector<char> bohr_set(const BohrSpec& spec);

struct ChiReport {
  bool nonneg = false;        // chi >= 0 everywhere
  bool ge1_on_bohr = false;   // chi >= 1 on B(Omega, eta)
  bool l1_lower = false;      // ||chi||_1 >= (eta/2)^|Omega|
  bool off_bohr_small = false;// chi <= (eta^2/8)^|Omega| off B(Omega, 2 eta)
  bool symmetric = false;     // chi(-n) = chi(n)
  double max_chi = 0;         // recorded; only finiteness required
  double l1 = 0;
  bool all() const { return nonneg && ge1_on_bohr && l1_lower && off_bohr_small && symmetric; }
};

struct ChiConstructionError : std::runtime_error {
  explicit ChiConstructionError(const std::string& clause)
      : std::runtime_error("chi construction failed clause: " + clause) {}
};

struct SmoothedIndicator {
  BohrSpec spec;
  std::vector<double> values;
  std::map<uint64_t, cd> coefficients;  // xi -> chihat(xi), |.| > 1e-12 kept
  uint64_t complexity = 0;              // >= #terms and >= max |amplitude|
  ChiReport report;
};

// chi(n) = prod_{xi in Omega} psi(||xi n/N||), psi(t) = 2 max(0, 1 - t/(2 eta)).
// A product of tent factors: vanishes identically off B(Omega, 2 eta), which
// makes the off-Bohr clause exact, and is >= 1 on B(Omega, eta). All report
// clauses are verified exhaustively; any failure throws ChiConstructionError.
// pre (desk scale): |Omega| <= 8, eta >= 1/64.
SmoothedIndicator build_chi(const BohrSpec& spec);

// unvalidated tent product with unit-height factors (values in [0,1]);
// used by the transference pipeline where eta is far below desk scale
std::vector<double> chi_tent_normalized(const BohrSpec& spec);

struct TransferenceReport {
  std::vector<uint64_t> Omega;
  double eta = 0;               // = eps0 = delta^8 eps^2 / (1e4 K0^2)
  bool cond_i = false;          // min over (N/3,2N/3) of f2*chi/||chi||_1 >= delta
  double cond_i_min = 0;
  bool cond_ii = false;         // sum_{N/3<n<N/2} f1(n) >= delta N
  double cond_ii_sum = 0;
  bool cond_iii = false;        // sum |fhat_j|^3 <= K0, j = 1,2
  double l3_f1 = 0, l3_f2 = 0;
  double chi_coeff_max_dev = 0; // max over Omega of |1 - chihat(xi)/||chi||_1| (measured only)
  std::vector<uint64_t> T;      // n in [0.9N, N) with f1*f2(n) < delta^2/3
  double T_fraction = 0;        // |T|/N
  bool conditions_hold = false;
  bool conclusion_holds = false;  // |T| <= eps N
};

// Transference pipeline: Omega = {xi : |f1hat(xi)| >= eps0} u {1}, chi from the
// tent product at eta = eps0, conditions measured, exceptional set tabulated.
// When the measured conditions hold, |T| <= eps N is asserted (throws
// std::logic_error otherwise); report-only when they do not.
TransferenceReport transference_demo(const std::vector<double>& f1, const std::vector<double>& f2,
                                     double delta, double eps, double K0);

// flat (index,value) CSV round trip for experiment replay
std::string signal_to_csv(const std::vector<cd>& f);
std::vector<cd> signal_from_csv(const std::string& csv);

}  // namespace qs
