// forms: linear forms Kn+b, amenability, the W/U moduli, the finite local
// lemmas (2-adic and mod 27), the B1/B2 residue decomposition, and the residue
// set Q with its exponential-sum bound.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qs {

struct LinearForm {
  int64_t K = 1;
  int64_t b = 0;
};

struct AmenabilityResult {
  bool amenable = false;
  int64_t j = 0, t = 0, h = 0;  // b-1 = 2^j 3^(2t) (4h+1)
  std::string violated;         // first failed clause, empty when amenable
};
AmenabilityResult is_amenable(const LinearForm& L);

struct ModulusW {
  int J = 5;
  int w = 13;
  int64_t U = 0;  // 2^J * 27
  int64_t W = 0;  // U * prod_{5<=p<=w} p
};
ModulusW build_W(int J, int w);

struct Lemma2adicResult {
  int J = 0;
  bool holds = false;
  // witness[n] = (a, i, b, j) with a+b = n mod 2^J, for each n !≡ 0 mod 2^(J-1)
  std::vector<std::array<int64_t, 4>> witness;  // indexed by n, {-1,...} where excluded
};
Lemma2adicResult check_lemma_2adic(int J);

struct Lemma27Decomposition {
  int a1 = 0, a2 = 0;          // a1+a2 = m' mod 27, both admissible
  std::array<int, 2> w1{}, w2{};  // (x,x') with x^2+x'^2 = a mod 27
};
// none when m' = 3,6 mod 9
std::optional<Lemma27Decomposition> check_lemma_27(int m_prime);

// exhaustive: for even m = 5,8 mod 9 there is no pair B1+B2 = m mod 27 with
// both residues compatible with amenability mod 27
bool check_mod27_obstruction();

// B1+B2 = m mod W with both Wn+B1, Wn+B2 amenable
std::pair<int64_t, int64_t> decompose_goldbach_residue(int64_t m, const ModulusW& M);

struct ResidueSetQ {
  int64_t Q = 1, W = 1, b = 0;
  std::vector<int64_t> members;       // c0 in [0,Q)
  int64_t formula_cardinality = 0;    // the closed-form product (exact)
  bool formula_matches = false;
};
ResidueSetQ residue_set_Q(int64_t Q, int64_t W, int64_t b);

struct ExpsumReport {
  double max_ratio = 0;   // max over q|Q, q>1, gcd(a,q)=1 of |sum e(a c0/q)| / |Q|
  double bound = 0;       // w^{-1/2}
  bool within_bound = true;
  int64_t worst_q = 0, worst_a = 0;
};
ExpsumReport check_expsum_bound(const ResidueSetQ& QS, int w);

int64_t mod_pos(int64_t a, int64_t m);  // representative in [0,m)
int64_t crt_pair(int64_t r1, int64_t m1, int64_t r2, int64_t m2);  // coprime moduli

}  // namespace qs
