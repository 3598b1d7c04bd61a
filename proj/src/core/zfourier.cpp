#include "core/zfourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qs {

namespace {

constexpr uint64_t kMaxN = uint64_t{1} << 22;

bool is_pow2(uint64_t n) { return n && (n & (n - 1)) == 0; }

// in-place iterative radix-2; sign = -1 forward, +1 inverse; no scaling
void fft_pow2(std::vector<cd>& a, int sign) {
  size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; i++) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * 2 * std::numbers::pi / static_cast<double>(len);
    cd wl = std::polar(1.0, ang);
    for (size_t i = 0; i < n; i += len) {
      cd w = 1;
      for (size_t k = 0; k < len / 2; k++) {
        cd u = a[i + k], v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

std::vector<cd> dft_direct(const std::vector<cd>& f, int sign) {
  size_t n = f.size();
  std::vector<cd> roots(n);
  for (size_t k = 0; k < n; k++)
    roots[k] = std::polar(1.0, sign * 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  std::vector<cd> out(n);
  for (size_t xi = 0; xi < n; xi++) {
    cd acc = 0;
    size_t idx = 0;
    for (size_t m = 0; m < n; m++) {
      acc += f[m] * roots[idx];
      idx += xi;
      if (idx >= n) idx -= n;
    }
    out[xi] = acc;
  }
  return out;
}

void check_size(size_t n) {
  if (n == 0 || n > kMaxN) throw std::invalid_argument("zfourier: N must be in [1, 2^22]");
}

}  // namespace

std::vector<cd> dft(const std::vector<cd>& f) {
  check_size(f.size());
  std::vector<cd> a;
  if (is_pow2(f.size())) {
    a = f;
    fft_pow2(a, -1);
  } else {
    a = dft_direct(f, -1);
  }
  double inv = 1.0 / static_cast<double>(f.size());
  for (auto& v : a) v *= inv;
  return a;
}

std::vector<cd> idft(const std::vector<cd>& fh) {
  check_size(fh.size());
  if (is_pow2(fh.size())) {
    std::vector<cd> a = fh;
    fft_pow2(a, +1);
    return a;
  }
  return dft_direct(fh, +1);
}

std::vector<cd> convolve(const std::vector<cd>& f, const std::vector<cd>& g) {
  if (f.size() != g.size()) throw std::invalid_argument("convolve: mismatched N");
  auto fh = dft(f), gh = dft(g);
  for (size_t i = 0; i < fh.size(); i++) fh[i] *= gh[i];
  return idft(fh);
}

std::vector<cd> convolve_direct(const std::vector<cd>& f, const std::vector<cd>& g) {
  if (f.size() != g.size()) throw std::invalid_argument("convolve_direct: mismatched N");
  size_t n = f.size();
  std::vector<cd> out(n);
  for (size_t m = 0; m < n; m++) {
    cd acc = 0;
    for (size_t k = 0; k < n; k++) acc += f[k] * g[(m + n - k) % n];
    out[m] = acc / static_cast<double>(n);
  }
  return out;
}

double lr_norm(const std::vector<cd>& f, double r) {
  double acc = 0;
  for (const cd& c : dft(f)) acc += std::pow(std::abs(c), r);
  return acc;
}

double circle_dist(uint64_t xi, uint64_t n, uint64_t N) {
  uint64_t r = (xi % N) * (n % N) % N;
  return static_cast<double>(std::min(r, N - r)) / static_cast<double>(N);
}

std::vector<char> bohr_set(const BohrSpec& spec) {
  check_size(spec.N);
  std::vector<char> mask(spec.N, 1);
  for (uint64_t xi : spec.Omega)
    for (uint64_t n = 0; n < spec.N; n++)
      if (circle_dist(xi, n, spec.N) > spec.eta) mask[n] = 0;
  return mask;
}

std::vector<double> chi_tent_normalized(const BohrSpec& spec) {
  check_size(spec.N);
  if (!(spec.eta > 0)) throw std::invalid_argument("chi: eta > 0 required");
  std::vector<double> chi(spec.N, 1.0);
  for (uint64_t xi : spec.Omega)
    for (uint64_t n = 0; n < spec.N; n++) {
      double t = circle_dist(xi, n, spec.N);
      chi[n] *= std::max(0.0, 1 - t / (2 * spec.eta));
    }
  return chi;
}

SmoothedIndicator build_chi(const BohrSpec& spec) {
  check_size(spec.N);
  if (spec.Omega.size() > 8) throw std::invalid_argument("build_chi: |Omega| <= 8 required");
  if (spec.eta < 1.0 / 64 || spec.eta >= 0.5)
    throw std::invalid_argument("build_chi: eta in [1/64, 1/2) required");
  SmoothedIndicator out;
  out.spec = spec;
  out.values = chi_tent_normalized(spec);
  size_t k = spec.Omega.size();
  double scale = std::pow(2.0, static_cast<double>(k));  // per-factor height 2
  for (double& v : out.values) v *= scale;

  ChiReport& rep = out.report;
  double sum = 0;
  rep.nonneg = rep.ge1_on_bohr = rep.l1_lower = rep.off_bohr_small = rep.symmetric = true;
  auto inB = bohr_set(spec);
  auto inB2 = bohr_set({spec.N, spec.Omega, 2 * spec.eta});
  double off_cap = std::pow(spec.eta * spec.eta / 8, static_cast<double>(k));
  for (uint64_t n = 0; n < spec.N; n++) {
    double v = out.values[n];
    if (!(v >= 0)) rep.nonneg = false;
    if (inB[n] && v < 1 - 1e-12) rep.ge1_on_bohr = false;
    if (!inB2[n] && v > off_cap + 1e-15) rep.off_bohr_small = false;
    if (std::abs(v - out.values[(spec.N - n) % spec.N]) > 1e-12 * (1 + v)) rep.symmetric = false;
    rep.max_chi = std::max(rep.max_chi, v);
    sum += v;
  }
  rep.l1 = sum / static_cast<double>(spec.N);
  rep.l1_lower = rep.l1 >= std::pow(spec.eta / 2, static_cast<double>(k)) * (1 - 1e-12);
  if (!rep.nonneg) throw ChiConstructionError("nonnegativity");
  if (!rep.ge1_on_bohr) throw ChiConstructionError("chi >= 1 on B(Omega, eta)");
  if (!rep.l1_lower) throw ChiConstructionError("||chi||_1 >= (eta/2)^|Omega|");
  if (!rep.off_bohr_small) throw ChiConstructionError("chi small off B(Omega, 2 eta)");
  if (!rep.symmetric) throw ChiConstructionError("symmetry");

  std::vector<cd> asc(out.values.begin(), out.values.end());
  auto spec_hat = dft(asc);
  double max_amp = 0;
  for (uint64_t xi = 0; xi < spec.N; xi++)
    if (std::abs(spec_hat[xi]) > 1e-12) {
      out.coefficients[xi] = spec_hat[xi];
      max_amp = std::max(max_amp, std::abs(spec_hat[xi]));
    }
  out.complexity = std::max<uint64_t>(
      {1, out.coefficients.size(), static_cast<uint64_t>(std::ceil(max_amp))});
  return out;
}

TransferenceReport transference_demo(const std::vector<double>& f1, const std::vector<double>& f2,
                                     double delta, double eps, double K0) {
  if (f1.size() != f2.size() || f1.empty()) throw std::invalid_argument("transference: mismatched N");
  for (double v : f1)
    if (!(v >= 0)) throw std::invalid_argument("transference: f1 must be nonnegative");
  for (double v : f2)
    if (!(v >= 0)) throw std::invalid_argument("transference: f2 must be nonnegative");
  if (!(delta > 0) || !(eps > 0) || !(K0 > 0))
    throw std::invalid_argument("transference: delta, eps, K0 must be positive");
  uint64_t N = f1.size();

  TransferenceReport rep;
  rep.eta = std::pow(delta, 8) * eps * eps / (1e4 * K0 * K0);

  std::vector<cd> c1(f1.begin(), f1.end()), c2(f2.begin(), f2.end());
  auto f1h = dft(c1);
  for (uint64_t xi = 0; xi < N; xi++)
    if (std::abs(f1h[xi]) >= rep.eta) rep.Omega.push_back(xi);
  if (!std::binary_search(rep.Omega.begin(), rep.Omega.end(), uint64_t{1})) {
    rep.Omega.push_back(1);
    std::sort(rep.Omega.begin(), rep.Omega.end());
  }

  // unit-height tent product: the conditions below are ratios, invariant
  // under the scaling, and the [0,1] range avoids overflow for large Omega
  auto chi = chi_tent_normalized({N, rep.Omega, rep.eta});
  std::vector<cd> cc(chi.begin(), chi.end());
  auto chih = dft(cc);
  double l1 = chih[0].real();  // chihat(0) = mean = ||chi||_1 (chi >= 0)
  for (uint64_t xi : rep.Omega)
    rep.chi_coeff_max_dev = std::max(rep.chi_coeff_max_dev, std::abs(1.0 - chih[xi] / l1));

  // (i): the Bohr-smoothed f2 is >= delta on the middle third
  auto g2 = convolve(c2, cc);
  rep.cond_i_min = std::numeric_limits<double>::infinity();
  for (uint64_t n = 0; n < N; n++)
    if (3 * n > N && 3 * n < 2 * N)
      rep.cond_i_min = std::min(rep.cond_i_min, g2[n].real() / l1);
  rep.cond_i = rep.cond_i_min >= delta * (1 - 1e-9);

  // (ii): f1 mass on (N/3, N/2)
  for (uint64_t n = 0; n < N; n++)
    if (3 * n > N && 2 * n < N) rep.cond_ii_sum += f1[n];
  rep.cond_ii = rep.cond_ii_sum >= delta * static_cast<double>(N) * (1 - 1e-9);

  // (iii): cubed spectral norms
  rep.l3_f1 = lr_norm(c1, 3);
  rep.l3_f2 = lr_norm(c2, 3);
  rep.cond_iii = rep.l3_f1 <= K0 && rep.l3_f2 <= K0;

  rep.conditions_hold = rep.cond_i && rep.cond_ii && rep.cond_iii;

  auto prod = convolve(c1, c2);
  double thresh = delta * delta / 3;
  for (uint64_t n = (9 * N + 9) / 10; n < N; n++)
    if (prod[n].real() < thresh) rep.T.push_back(n);
  rep.T_fraction = static_cast<double>(rep.T.size()) / static_cast<double>(N);
  rep.conclusion_holds =
      static_cast<double>(rep.T.size()) <= eps * static_cast<double>(N) * (1 + 1e-12);
  if (rep.conditions_hold && !rep.conclusion_holds)
    throw std::logic_error("transference: conditions hold but |T| > eps N");
  return rep;
}

std::string signal_to_csv(const std::vector<cd>& f) {
  std::ostringstream os;
  os << "index,re,im\n";
  char buf[80];
  for (size_t i = 0; i < f.size(); i++) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, f[i].real(), f[i].imag());
    os << buf;
  }
  return os.str();
}

std::vector<cd> signal_from_csv(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  std::vector<cd> out;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("signal_from_csv: malformed row");
    out.emplace_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)), std::stod(line.substr(c2 + 1)));
  }
  return out;
}

}  // namespace qs
