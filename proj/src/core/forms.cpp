#include "core/forms.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "core/arith.hpp"

namespace qs {

int64_t mod_pos(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

static int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = 1, y = 0;
    return a;
  }
  int64_t x1, y1;
  int64_t g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

static int64_t inv_mod(int64_t a, int64_t m) {
  int64_t x, y;
  int64_t g = egcd(mod_pos(a, m), m, x, y);
  if (g != 1) throw std::invalid_argument("inv_mod: not invertible");
  return mod_pos(x, m);
}

int64_t crt_pair(int64_t r1, int64_t m1, int64_t r2, int64_t m2) {
  int64_t d = mod_pos(r2 - r1, m2);
  int64_t k = static_cast<int64_t>(static_cast<__int128>(d) * inv_mod(m1 % m2, m2) % m2);
  return static_cast<int64_t>((static_cast<__int128>(m1) * k + r1) % (static_cast<__int128>(m1) * m2));
}

// ---------------------------------------------------------------- amenability

AmenabilityResult is_amenable(const LinearForm& L) {
  AmenabilityResult r;
  int64_t K = L.K, b = L.b;
  if (K < 1) {
    r.violated = "K < 1";
    return r;
  }
  if (K % 216 != 0) {
    r.violated = "(i) 216 | K fails";
    return r;
  }
  if (std::gcd(mod_pos(b, K), K) != 1) {
    r.violated = "(ii) gcd(b,K) != 1";
    return r;
  }
  int64_t sK = static_cast<int64_t>(s_of(static_cast<uint64_t>(K)));
  if (std::gcd(mod_pos(b - 1, sK), sK) != 1) {
    r.violated = "(ii) gcd(b-1,s(K)) != 1";
    return r;
  }
  int64_t c = b - 1;
  if (c == 0) {
    r.violated = "(iii) b = 1 has no decomposition";
    return r;
  }
  uint64_t ac = static_cast<uint64_t>(c < 0 ? -c : c);
  int64_t j = v_p(ac, 2);
  int64_t v3 = v_p(ac, 3);
  if (v3 % 2 != 0) {
    r.violated = "(iii) v3(b-1) odd";
    return r;
  }
  int64_t t = v3 / 2;
  int64_t m = c;
  for (int64_t i = 0; i < j; i++) m /= 2;
  for (int64_t i = 0; i < v3; i++) m /= 3;
  if (mod_pos(m, 4) != 1) {
    r.violated = "(iii) m != 1 mod 4";
    return r;
  }
  if (mod_pos(m, 3) == 0) {
    r.violated = "(iii) 3 | m";
    return r;
  }
  if (j + 2 > 62) {
    r.violated = "(iii) 2^(j+2) exceeds range";
    return r;
  }
  __int128 need = static_cast<__int128>(1) << (j + 2);
  for (int64_t i = 0; i < 2 * t + 1; i++) need *= 3;
  if (need > K || K % static_cast<int64_t>(need) != 0) {
    r.violated = "(iii) 2^(j+2) 3^(2t+1) | K fails";
    return r;
  }
  r.amenable = true;
  r.j = j;
  r.t = t;
  r.h = (m - 1) / 4;
  return r;
}

ModulusW build_W(int J, int w) {
  if (J < 5 || w < 5) throw std::invalid_argument("build_W: requires J >= 5 and w >= 5");
  if (J > 60) throw std::range_error("build_W: J too large");
  ModulusW M;
  M.J = J;
  M.w = w;
  __int128 U = (static_cast<__int128>(1) << J) * 27;
  __int128 W = U;
  constexpr __int128 kMax = INT64_MAX;
  PrimeTable pt(static_cast<uint64_t>(w));
  pt.for_each_prime(5, static_cast<uint64_t>(w), [&](uint64_t p) {
    W *= static_cast<__int128>(p);
    if (W > kMax) throw std::range_error("build_W: W overflows 63 bits");
  });
  if (U > kMax || W > kMax) throw std::range_error("build_W: overflow");
  M.U = static_cast<int64_t>(U);
  M.W = static_cast<int64_t>(W);
  return M;
}

// ------------------------------------------------------------- local lemmas

// a is an admissible 2-adic residue mod 2^J iff a = 2^i mod 2^(i+2) for the
// (unique) i = v2(a); returns i or -1
static int adm2_index(int64_t a, int J) {
  if (a == 0) return -1;
  int i = 0;
  while ((a & 1) == 0) a >>= 1, i++;
  if (i > J - 3) return -1;
  return (a & 3) == 1 ? i : -1;
}

// find a = 2^i mod 2^(i+2), b = 2^j mod 2^(j+2) with a+b = n mod 2^J
static std::array<int64_t, 4> witness_2adic(int64_t n, int J) {
  int64_t M = int64_t{1} << J;
  for (int i = 0; i <= J - 3; i++) {
    for (int j = 0; j <= J - 3; j++) {
      // need a = 2^i mod 2^(i+2) and a = n - 2^j mod 2^(j+2); solvable iff the
      // two congruences agree modulo 2^(min(i,j)+2)
      int64_t mi = int64_t{1} << (i + 2), mj = int64_t{1} << (j + 2);
      int64_t lo = std::min(mi, mj);
      if (mod_pos((int64_t{1} << i) - (n - (int64_t{1} << j)), lo) != 0) continue;
      int64_t a = mi >= mj ? mod_pos(int64_t{1} << i, mi) : mod_pos(n - (int64_t{1} << j), mj);
      int64_t b = mod_pos(n - a, M);
      if (adm2_index(a, J) == i && adm2_index(b, J) == j) return {a, i, b, j};
    }
  }
  return {-1, -1, -1, -1};
}

Lemma2adicResult check_lemma_2adic(int J) {
  if (J < 5 || J > 20) throw std::invalid_argument("check_lemma_2adic: J out of [5,20]");
  Lemma2adicResult res;
  res.J = J;
  res.holds = true;
  int64_t M = int64_t{1} << J, half = M / 2;
  res.witness.assign(static_cast<size_t>(M), {-1, -1, -1, -1});
  for (int64_t n = 0; n < M; n++) {
    if (n % half == 0) continue;  // excluded by the lemma's hypothesis
    auto w = witness_2adic(n, J);
    res.witness[static_cast<size_t>(n)] = w;
    if (w[0] < 0) res.holds = false;
  }
  return res;
}

static const std::array<std::array<int, 2>, 27>& two_square_witness_27() {
  static std::array<std::array<int, 2>, 27> wit;
  static bool init = false;
  if (!init) {
    for (auto& w : wit) w = {-1, -1};
    for (int x = 0; x <= 13; x++)
      for (int y = x; y <= 13; y++) {
        int r = (x * x + y * y) % 27;
        if (wit[r][0] < 0) wit[r] = {x, y};
      }
    init = true;
  }
  return wit;
}

static bool admissible_27(int r) {
  r = ((r % 27) + 27) % 27;
  int r9 = r % 9;
  return (r9 == 0 || r9 == 2 || r9 == 5 || r9 == 8) && r != 0;
}

std::optional<Lemma27Decomposition> check_lemma_27(int m_prime) {
  int m = ((m_prime % 27) + 27) % 27;
  if (m % 9 == 3 || m % 9 == 6) return std::nullopt;
  const auto& wit = two_square_witness_27();
  for (int a1 = 0; a1 < 27; a1++) {
    if (!admissible_27(a1) || wit[a1][0] < 0) continue;
    int a2 = ((m - a1) % 27 + 27) % 27;
    if (!admissible_27(a2) || wit[a2][0] < 0) continue;
    Lemma27Decomposition d;
    d.a1 = a1;
    d.a2 = a2;
    d.w1 = wit[a1];
    d.w2 = wit[a2];
    return d;
  }
  return std::nullopt;
}

bool check_mod27_obstruction() {
  // residues compatible with amenability at the prime 3 (v2(W)-independent):
  // 3 does not divide B, and v3(B-1) mod 27 lies in {0 (not div by 3), 2}
  auto compatible = [](int B) {
    if (B % 3 == 0) return false;
    int r = ((B - 1) % 27 + 27) % 27;
    if (r == 0) return false;          // would force v3(b-1) >= 3, impossible
    if (r % 3 != 0) return true;       // v3 = 0
    return r == 9 || r == 18;          // v3 = 2
  };
  for (int m = 0; m < 27; m++) {
    if (m % 9 != 5 && m % 9 != 8) continue;
    for (int b1 = 0; b1 < 27; b1++)
      for (int b2 = 0; b2 < 27; b2++)
        if ((b1 + b2) % 27 == m && compatible(b1) && compatible(b2)) return false;
  }
  return true;
}

// -------------------------------------------------- B1/B2 decomposition

std::pair<int64_t, int64_t> decompose_goldbach_residue(int64_t m, const ModulusW& M) {
  if (m % 2 != 0) throw std::invalid_argument("decompose: m must be even");
  int64_t r9 = mod_pos(m, 9);
  if (r9 == 5 || r9 == 8) throw std::invalid_argument("decompose: m = 5,8 mod 9 excluded");
  int64_t twoJ = int64_t{1} << M.J;
  if (mod_pos(m, twoJ) == 2) throw std::invalid_argument("decompose: m = 2 mod 2^J excluded");

  int64_t mp = (m - 2) / 2;  // m = 2m' + 2
  auto w2 = witness_2adic(mod_pos(mp, twoJ), M.J);
  if (w2[0] < 0) throw std::logic_error("decompose: 2-adic lemma witness missing");
  auto d27 = check_lemma_27(static_cast<int>(mod_pos(mp, 27)));
  if (!d27) throw std::logic_error("decompose: mod-27 lemma witness missing");

  int64_t B = mod_pos(2 * w2[0] + 1, twoJ);
  int64_t mod = twoJ;
  B = crt_pair(B, mod, mod_pos(2 * d27->a1 + 1, 27), 27);
  mod *= 27;
  PrimeTable pt(static_cast<uint64_t>(std::max(M.w, 5)));
  pt.for_each_prime(5, static_cast<uint64_t>(M.w), [&](uint64_t pu) {
    int64_t p = static_cast<int64_t>(pu);
    int64_t avoid0 = 0, avoid1 = 1, avoidm = mod_pos(m, p), avoidm1 = mod_pos(m - 1, p);
    int64_t bp = 2;
    while (bp == avoid0 || bp == avoid1 || bp == avoidm || bp == avoidm1) bp++;
    B = crt_pair(B, mod, bp, p);
    mod *= p;
  });
  if (mod != M.W) throw std::logic_error("decompose: modulus mismatch");

  int64_t B1 = mod_pos(B, M.W);
  int64_t B2 = mod_pos(m - B, M.W);
  if (!is_amenable({M.W, B1}).amenable || !is_amenable({M.W, B2}).amenable)
    throw std::logic_error("decompose: constructed forms not amenable");
  return {B1, B2};
}

// ------------------------------------------------------------- residue set Q

ResidueSetQ residue_set_Q(int64_t Q, int64_t W, int64_t b) {
  if (Q < 1) throw std::invalid_argument("residue_set_Q: Q >= 1 required");
  ResidueSetQ r;
  r.Q = Q;
  r.W = W;
  r.b = b;
  int64_t sQ = static_cast<int64_t>(s_of(static_cast<uint64_t>(Q)));
  for (int64_t c0 = 0; c0 < Q; c0++) {
    int64_t v = static_cast<int64_t>(mod_pos(
        static_cast<int64_t>((static_cast<__int128>(W) * c0 + b) % Q), Q));
    if (std::gcd(v, Q) != 1) continue;
    int64_t u = static_cast<int64_t>(mod_pos(
        static_cast<int64_t>((static_cast<__int128>(W) * c0 + b - 1) % sQ), sQ));
    if (std::gcd(u, sQ) != 1) continue;
    r.members.push_back(c0);
  }
  // closed-form cardinality: product over p^a || Q of p^(a-1) * (p - omega_p),
  // omega_p = 0 if p | W, else 2 if p = -1 mod 4 and p != 3, else 1
  __int128 card = 1;
  for (auto [p, e] : factorize(static_cast<uint64_t>(Q)).factors) {
    int64_t pp = static_cast<int64_t>(p);
    int64_t omega = (W % pp == 0) ? 0 : ((pp % 4 == 3 && pp != 3) ? 2 : 1);
    for (int i = 0; i < e - 1; i++) card *= pp;
    card *= (pp - omega);
  }
  r.formula_cardinality = static_cast<int64_t>(card);
  r.formula_matches = r.formula_cardinality == static_cast<int64_t>(r.members.size());
  return r;
}

ExpsumReport check_expsum_bound(const ResidueSetQ& QS, int w) {
  ExpsumReport rep;
  rep.bound = 1.0 / std::sqrt(static_cast<double>(w));
  if (QS.members.empty()) return rep;
  // all divisors of Q
  std::vector<int64_t> divs{1};
  for (auto [p, e] : factorize(static_cast<uint64_t>(QS.Q)).factors) {
    size_t sz = divs.size();
    int64_t pk = 1;
    for (int i = 0; i < e; i++) {
      pk *= static_cast<int64_t>(p);
      for (size_t k = 0; k < sz; k++) divs.push_back(divs[k] * pk);
    }
  }
  const double twopi = 2.0 * M_PI;
  for (int64_t q : divs) {
    if (q == 1) continue;
    for (int64_t a = 1; a < q; a++) {
      if (std::gcd(a, q) != 1) continue;
      std::complex<double> s{0, 0};
      for (int64_t c0 : QS.members) {
        double ph = twopi * static_cast<double>(mod_pos(a * (c0 % q), q)) / static_cast<double>(q);
        s += std::complex<double>(std::cos(ph), std::sin(ph));
      }
      double ratio = std::abs(s) / static_cast<double>(QS.members.size());
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.worst_q = q;
        rep.worst_a = a;
      }
    }
  }
  rep.within_bound = rep.max_ratio <= rep.bound + 1e-12;
  return rep;
}

}  // namespace qs
