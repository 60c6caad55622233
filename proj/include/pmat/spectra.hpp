#pragma once

#include <utility>
#include <vector>

#include "pmat/poly.hpp"
#include "pmat/report.hpp"

namespace pmat {

// Multiplicities of (t+1) and (t^2+t+1) in the characteristic polynomial
// of the n x n symmetric Pascal matrix over F_2.
struct GammaPair {
    long long gamma = 0;
    long long gamma2 = 0;
};

// gamma by the defining recursion (n = 2^l - k, 0 <= k <= 2^{l-1});
// gamma2 = (n - gamma)/2. Memoized, safe under concurrent callers.
GammaPair gamma_pair(long long n);

// The four alternative identities for gamma. Each is evaluated through its
// own closed form and must agree with gamma_pair(n).gamma; n outside the
// identity's validity range raises range_error.
enum class GammaVariant { i, ii, iii, iv };
long long gamma_alt(long long n, GammaVariant variant);

// (t+1)^gamma(n) (t^2+t+1)^gamma2(n) over F_2.
PolyFp chi_mod2(long long n);

// Splits q into (p, l) with q = p^l, l >= 1; parameter_error otherwise.
std::pair<long long, long long> prime_power_split(long long q);

// (t^2+t+1)^{(q-eps)/3} (t-1)^{(q+2 eps)/3} over F_p, for q = p^l.
PolyFp chi_q_formula(long long q, long long p);

// The product formula for chi_{q-k} mod p, 0 <= k <= q/2. Negative factor
// exponents are resolved by exact division (see the decision notes).
PolyFp chi_qmk_formula(long long q, long long k, long long p);

// det(tI + P(k)) and det(t^2 I + P(k)) over F_p, via (-1)^k chi_k(-t).
PolyFp det_tI_plus_P(long long k, const FpDomain& dom);
PolyFp det_t2I_plus_P(long long k, const FpDomain& dom);

// The conjectural mod-3 recursion: n = 3^l -+ k with 0 <= k < 3^l/2 maps to
// (t-1)^{3^l-3k} det(t^2 I + P(k)) resp. (t-1)^{3^l-3k} (t+1)^{3k}
// det(tI + P(k)), the dets fed from the recursion itself; returned monic.
PolyFp chi_mod3_conjectural(long long n);

// Multiplicities of the three recurring factors plus the remaining cofactor.
struct FactorizationReport {
    long long mult_t_minus_1 = 0;
    long long mult_t_plus_1 = 0;
    long long mult_t2_t_1 = 0;
    PolyFp cofactor;
};
FactorizationReport factor_shape(const PolyFp& f);

// The lifted conjectural cofactor c_k plus its certificate bits.
struct CkResult {
    PolyZ ck;
    bool stable = false;      // lift unchanged when the last prime is dropped
    bool monic = false;
    bool degree_ok = false;   // degree exactly 4k
    bool palindromic = false; // t^{4k} c_k(1/t) = c_k(t)
};

// One (p, l) per base prime with p^l >= 2k.
std::vector<std::pair<long long, long long>> default_ck_prime_powers(long long k);

CkResult extract_ck(long long k, const std::vector<std::pair<long long, long long>>& prime_powers);

CheckReport check_ck_mod3(long long k);
CheckReport check_ck_mod2(long long k);
CheckReport check_final_conjecture(long long q);
CheckReport check_selfdual_code(long long q);
CheckReport check_shifted_conjecture(long long q);

} // namespace pmat
