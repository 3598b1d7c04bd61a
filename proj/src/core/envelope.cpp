#include "core/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "core/arith.hpp"
#include "core/forms.hpp"

namespace qs {

namespace {

int64_t inv_mod_p(int64_t a, int64_t p) {
  int64_t r0 = p, r1 = mod_pos(a, p), s0 = 0, s1 = 1;
  while (r1) {
    int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return mod_pos(s0, p);
}

int mu_of(const std::vector<uint64_t>& primes, uint64_t d) {
  int k = 0;
  for (uint64_t p : primes)
    if (d % p == 0) k++;
  return k % 2 == 0 ? 1 : -1;
}

// squarefree product of sifting primes? (assumes d >= 1)
bool sifting_product(const std::vector<uint64_t>& primes, uint64_t d) {
  for (uint64_t p : primes)
    while (d % p == 0) {
      d /= p;
      if (d % p == 0) return false;  // square
    }
  return d == 1;
}

uint64_t kset_size(const EnvelopeModel& m, uint64_t d) {
  uint64_t out = 1;
  for (uint64_t p : m.primes)
    if (d % p == 0) out *= p - envelope_omega(p);
  return out;
}

std::vector<uint64_t> kset_members(const EnvelopeModel& m, uint64_t q) {
  std::vector<uint64_t> out;
  for (uint64_t b = 0; b < q; b++) {
    bool ok = true;
    for (uint64_t p : m.primes)
      if (q % p == 0) {
        const auto& bad = m.sifted_n.at(p);
        if (std::find(bad.begin(), bad.end(), b % p) != bad.end()) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(b);
  }
  return out;
}

}  // namespace

int envelope_omega(uint64_t p) { return p % 4 == 1 ? 1 : 2; }

EnvelopeModel build_envelope(int64_t W, int64_t B, int64_t w, double z, uint64_t N) {
  if (W < 1 || N < 1 || w < 2 || z <= 0) throw std::invalid_argument("build_envelope: bad parameters");
  auto am = is_amenable({W, B});
  if (!am.amenable)
    throw std::invalid_argument("build_envelope: Wn+B not amenable (" + am.violated + ")");
  EnvelopeModel m;
  m.W = W;
  m.B = B;
  m.w = w;
  m.z = z;
  m.N = N;

  if (z > 2) {
    PrimeTable pt(static_cast<uint64_t>(z) + 1);
    pt.for_each_prime(2, static_cast<uint64_t>(z), [&](uint64_t p) {
      if (static_cast<double>(p) > static_cast<double>(w) && static_cast<double>(p) < z)
        m.primes.push_back(p);
    });
  }
  for (uint64_t p : m.primes) {
    if (W % static_cast<int64_t>(p) == 0)
      throw std::invalid_argument("build_envelope: sifting prime divides W");
    int64_t winv = inv_mod_p(W, static_cast<int64_t>(p));
    std::vector<uint64_t> cls;
    // A_p = {0} (p = 1 mod 4) or {0,1}: pull back through n = (r - B) W^{-1}
    cls.push_back(static_cast<uint64_t>(mod_pos((0 - B) * winv, static_cast<int64_t>(p))));
    if (envelope_omega(p) == 2)
      cls.push_back(static_cast<uint64_t>(mod_pos((1 - B) * winv, static_cast<int64_t>(p))));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    m.sifted_n[p] = cls;
  }

  // squarefree products of sifting primes up to z^2
  double cap = z * z;
  std::vector<uint64_t> divs{1};
  for (size_t i = 0; i < divs.size(); i++) {
    uint64_t d = divs[i];
    for (uint64_t p : m.primes) {
      if (d % p == 0) continue;
      if (d != 1 && p <= *std::find_if(m.primes.rbegin(), m.primes.rend(),
                                       [&](uint64_t q) { return d % q == 0; }))
        continue;  // extend by larger primes only, each product generated once
      double nd = static_cast<double>(d) * static_cast<double>(p);
      if (nd > cap) continue;
      divs.push_back(d * p);
      if (divs.size() > 1'000'000)
        throw std::length_error("build_envelope: divisor explosion past 1000000");
    }
  }
  std::sort(divs.begin(), divs.end());
  m.divisors = divs;

  for (uint64_t d : m.divisors) {
    rational hv = 1;
    for (uint64_t p : m.primes)
      if (d % p == 0) {
        int om = envelope_omega(p);
        hv *= rational(om, static_cast<int64_t>(p) - om);
      }
    m.h[d] = hv;
  }

  // G_d(z) = sum_{delta <= z, [d,delta] <= z} h(delta); zero for d > z
  std::vector<uint64_t> small;  // divisors <= z
  for (uint64_t d : m.divisors)
    if (static_cast<double>(d) <= z) small.push_back(d);
  for (uint64_t d : m.divisors) {
    rational g = 0;
    if (static_cast<double>(d) <= z)
      for (uint64_t delta : small) {
        uint64_t l = d / std::gcd(d, delta) * delta;
        if (static_cast<double>(l) <= z) g += m.h.at(delta);
      }
    m.G[d] = g;
  }
  m.G1 = m.G.at(1);
  for (uint64_t d : m.divisors) m.rho[d] = rational(mu_of(m.primes, d)) * m.G.at(d) / m.G1;

  for (uint64_t ell : m.divisors) {
    rational acc = 0;
    for (uint64_t d : small)
      if (d % ell == 0) acc += rational(mu_of(m.primes, d / ell) * mu_of(m.primes, d)) * m.rho.at(d);
    m.rho_star_[ell] = acc;
  }

  for (uint64_t d1 : small)
    for (uint64_t d2 : small) {
      rational prod = m.rho_star_.at(d1) * m.rho_star_.at(d2);
      if (prod == 0) continue;
      uint64_t l = d1 / std::gcd(d1, d2) * d2;
      m.lcm_mass[l] += prod;
    }
  return m;
}

rational beta_at(const EnvelopeModel& m, uint64_t n) {
  rational sum = 0;
  for (uint64_t d : m.divisors) {
    const rational& rd = m.rho.at(d);
    if (rd == 0) continue;
    bool member = true;
    for (uint64_t p : m.primes)
      if (d % p == 0) {
        const auto& bad = m.sifted_n.at(p);
        if (std::find(bad.begin(), bad.end(), n % p) == bad.end()) {
          member = false;
          break;
        }
      }
    if (member) sum += rd;
  }
  return m.G1 * sum * sum;
}

bool beta_is_trivial_at(const EnvelopeModel& m, uint64_t n) {
  for (uint64_t p : m.primes) {
    const auto& bad = m.sifted_n.at(p);
    if (std::find(bad.begin(), bad.end(), n % p) != bad.end()) return false;
  }
  return true;
}

rational beta_window_average(const EnvelopeModel& m) {
  rational acc = 0;
  for (uint64_t n = 0; n < m.N; n++) acc += beta_at(m, n);
  return acc / rational(m.N);
}

rational rho_star(const EnvelopeModel& m, uint64_t ell) {
  if (ell == 0 || !sifting_product(m.primes, ell))
    throw std::invalid_argument("rho_star: ell does not divide P(z)");
  auto it = m.rho_star_.find(ell);
  return it == m.rho_star_.end() ? rational(0) : it->second;
}

rational fourier_prefactor(const EnvelopeModel& m, uint64_t q) {
  if (q == 0) throw std::invalid_argument("fourier_prefactor: q >= 1 required");
  if (q != 1 && !sifting_product(m.primes, q)) return 0;
  rational acc = 0;
  for (const auto& [D, mass] : m.lcm_mass)
    if (D % q == 0) acc += mass * rational(kset_size(m, D), D);
  return m.G1 * acc / rational(kset_size(m, q));
}

std::complex<double> fourier_v(const EnvelopeModel& m, uint64_t a, uint64_t q) {
  if (q == 0 || std::gcd(a, q) != 1) throw std::invalid_argument("fourier_v: gcd(a,q) = 1 required");
  rational R = fourier_prefactor(m, q);
  if (R == 0) return 0;
  std::complex<long double> s = 0;
  for (uint64_t b : kset_members(m, q)) {
    long double ang = 2 * std::numbers::pi_v<long double> *
                      static_cast<long double>(a % q * b % q) / static_cast<long double>(q);
    s += std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  long double Rd = static_cast<long double>(R);
  return {static_cast<double>(Rd * s.real()), static_cast<double>(Rd * s.imag())};
}

double verify_expansion(const EnvelopeModel& m, const std::vector<uint64_t>& sample) {
  std::vector<std::complex<long double>> recon(sample.size(), 0);
  const long double pi2 = 2 * std::numbers::pi_v<long double>;
  for (uint64_t q : m.divisors) {
    rational R = fourier_prefactor(m, q);
    if (R == 0) continue;
    long double Rd = static_cast<long double>(R);
    auto K = kset_members(m, q);
    for (uint64_t a = q == 1 ? 0 : 1; a < std::max<uint64_t>(q, 1); a++) {
      if (q != 1 && std::gcd(a, q) != 1) continue;
      std::complex<long double> s = 0;
      for (uint64_t b : K) {
        long double ang = pi2 * static_cast<long double>(a * b % std::max<uint64_t>(q, 1)) /
                          static_cast<long double>(q);
        s += std::complex<long double>(std::cos(ang), std::sin(ang));
      }
      if (q == 1) s = 1;
      std::complex<long double> c = Rd * s;
      for (size_t i = 0; i < sample.size(); i++) {
        long double ang = -pi2 * static_cast<long double>(a * (sample[i] % q) % q) /
                          static_cast<long double>(q);
        recon[i] += c * std::complex<long double>(std::cos(ang), std::sin(ang));
      }
    }
  }
  double worst = 0;
  for (size_t i = 0; i < sample.size(); i++) {
    long double truth = static_cast<long double>(beta_at(m, sample[i]));
    worst = std::max(worst, static_cast<double>(std::abs(recon[i] - truth)));
  }
  return worst;
}

std::string envelope_dump(const EnvelopeModel& m) {
  std::ostringstream os;
  os << "QSENV 1\n";
  char zbuf[40];
  std::snprintf(zbuf, sizeof zbuf, "%.17g", m.z);
  os << m.W << ' ' << m.B << ' ' << m.w << ' ' << zbuf << ' ' << m.N << '\n';
  os << m.primes.size() << '\n';
  for (uint64_t p : m.primes) {
    os << p;
    for (uint64_t r : m.sifted_n.at(p)) os << ' ' << r;
    os << '\n';
  }
  os << m.G1 << '\n';
  os << m.divisors.size() << '\n';
  for (uint64_t d : m.divisors)
    os << d << ' ' << m.h.at(d) << ' ' << m.G.at(d) << ' ' << m.rho.at(d) << ' '
       << m.rho_star_.at(d) << '\n';
  os << m.lcm_mass.size() << '\n';
  for (const auto& [D, mass] : m.lcm_mass) os << D << ' ' << mass << '\n';
  return os.str();
}

EnvelopeModel envelope_restore(const std::string& text) {
  std::istringstream is(text);
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (magic != "QSENV" || version != 1)
    throw std::invalid_argument("envelope_restore: unsupported format");
  EnvelopeModel m;
  is >> m.W >> m.B >> m.w >> m.z >> m.N;
  size_t np = 0;
  is >> np;
  is.ignore();
  for (size_t i = 0; i < np; i++) {
    std::string line;
    std::getline(is, line);
    std::istringstream ls(line);
    uint64_t p, r;
    ls >> p;
    m.primes.push_back(p);
    while (ls >> r) m.sifted_n[p].push_back(r);
  }
  std::string tok;
  is >> tok;
  m.G1 = rational(tok);
  size_t nd = 0;
  is >> nd;
  for (size_t i = 0; i < nd; i++) {
    uint64_t d;
    std::string hs, gs, rs, ss;
    is >> d >> hs >> gs >> rs >> ss;
    m.divisors.push_back(d);
    m.h[d] = rational(hs);
    m.G[d] = rational(gs);
    m.rho[d] = rational(rs);
    m.rho_star_[d] = rational(ss);
  }
  size_t nl = 0;
  is >> nl;
  for (size_t i = 0; i < nl; i++) {
    uint64_t D;
    std::string ms;
    is >> D >> ms;
    m.lcm_mass[D] = rational(ms);
  }
  if (!is) throw std::invalid_argument("envelope_restore: truncated input");
  return m;
}

}  // namespace qs
