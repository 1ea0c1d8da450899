#ifndef MIRRORMAP_PADIC_HPP
#define MIRRORMAP_PADIC_HPP

#include "mirrormap/numeric.hpp"
#include "mirrormap/spec.hpp"

namespace mirrormap::padic {

/// Per-prime data for a spec: lambda_p is the unique integer with
/// p^lambda < M <= p^(lambda+1); it exists because M >= 2 for the specs the
/// theorems cover.
struct PAdicContext {
  FactorialRatioSpec spec;
  long p = 0;
  long big_m = 0;
  long lambda_p = 0;

  PAdicContext(FactorialRatioSpec spec, long p);
};

enum class VpQMethod { legendre, delta_sum };

/// vp(Q(n)) by Legendre sums over floor(e_i n / p^l).
long vp_q_legendre(const FactorialRatioSpec& spec, long n, long p);

/// vp(Q(n)) as sum_l Delta({n/p^l}); agrees with Legendre for weight-balanced
/// specs. The sum is cut once p^l > M n, where the fractional part drops
/// below 1/M for good.
long vp_q_delta_sum(const FactorialRatioSpec& spec, long n, long p);

long vp_q(const FactorialRatioSpec& spec, long n, long p, VpQMethod method);

/// mu_p(m) = sum_l 1_{[1/M,1)}({m/p^l}); g_p(m) = p^mu.
long mu_p(const FactorialRatioSpec& spec, long p, long m);

struct MuG {
  long mu;
  long g_valuation;  // vp(g_p(m)) == mu
};

MuG mu_and_g(const PAdicContext& ctx, long m);

/// Coefficient of z^(a+Kp) in F(z)G(z^p) - pF(z^p)G(z).
Rat phi(const FactorialRatioSpec& spec, long p, long a, long K);

/// Coefficient of z^(a+Kp) in F(z)G_L(z^p) - pF(z^p)G_L(z).
Rat phi_l(const FactorialRatioSpec& spec, long L, long p, long a, long K);

/// sum_{j=m p^s}^{(m+1)p^s - 1} (Q(a+jp)Q(K-j) - Q(j)Q(a+(K-j)p)), Q(neg) = 0.
Rat s_sum(const FactorialRatioSpec& spec, long p, long a, long K, long s, long m);

/// Product of k < n coprime to p; n >= 1. Memoized per prime.
Int gamma_p(long n, long p);

/// (-1)^n gamma_p(n).
Int big_gamma_p(long n, long p);

/// Q(c) Q(cp + m p^(s+1)) / (Q(cp) Q(c + m p^s)) lies in 1 + p^(s+1) Z_p.
bool ratio_congruence_check(const FactorialRatioSpec& spec, long p, long s, long c, long m);

/// eta_s(a, m) = sum_{l > s} Delta({(a + m p^s)/p^l}), finite.
long eta(const FactorialRatioSpec& spec, long p, long s, long a, long m);

Rat x_quotient(const PAdicContext& ctx, long s, long v, long u, long m);
Rat y_product(const PAdicContext& ctx, long s, long v, long u, long m);

/// X in Y (1 + p^(s+lambda+1) Z_p) together with the eta formula for vp(Y).
bool xy_valuation_check(const PAdicContext& ctx, long s, long v, long u, long m);

/// vp( p^(s+1) g_p(m) (H_{L m p^s} - H_{L floor(m/p) p^(s+1)}) ) >= 1.
bool harmonic_diff_check(const FactorialRatioSpec& spec, long p, long L, long s, long m);

/// Phi_{L,p}(a+Kp) == sum_j H_{Lj}(Q(a+jp)Q(K-j) - Q(j)Q(a+(K-j)p)) mod p Z_p.
bool rewrite_congruence_check(const FactorialRatioSpec& spec, long p, long L, long a,
                              long K);

/// The H_{Lj}-weighted sum equals the double sum of
/// (H_{L m p^s} - H_{L floor(m/p) p^(s+1)}) S(a,K,s,p,m) over s <= r,
/// m < p^(r+1-s), with r minimal such that K < p^r. Exact rational identity.
bool w_decomposition_check(const FactorialRatioSpec& spec, long p, long L, long a,
                           long K);

/// Q(a+jp) sum_{i<=floor(La/p)} 1/(Lj+i) in p Z_p.
bool q_rho_check(const FactorialRatioSpec& spec, long p, long L, long a, long j);

/// Fractional-part bound: if floor(La/p^s) >= 1 then {(a+m p^s)/p^l} >= 1/M
/// for all u <= floor(La/p^s) and l in [s, s + vp(Lm+u)]. Pure arithmetic.
bool lemma24_fractional_check(long p, long s, long a, long big_m, long m, long L);

struct NaiveDworkCounterexample {
  long lhs_valuation;  // v_3 of H_30 (Q(16)/Q(7) - Q(5)/Q(2))
  long rhs_valuation;  // v_3 of 1/Q(7)
};

/// The e=(10,5), f=(4,4,3,2,1,1), p=3 witness that the plain Dwork
/// congruence criterion cannot prove these integrality statements.
NaiveDworkCounterexample naive_dwork_counterexample();

}  // namespace mirrormap::padic

#endif
