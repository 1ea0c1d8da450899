#ifndef MIRRORMAP_DWORK_HPP
#define MIRRORMAP_DWORK_HPP

#include <functional>
#include <string>
#include <vector>

#include "mirrormap/numeric.hpp"
#include "mirrormap/spec.hpp"

namespace mirrormap::dwork {

/// A k0-couple: level-indexed maps A_r (nonzero on N, extended by 0 on
/// negatives) and g_r (nonzero, vp >= 0), subject to the congruence
/// conditions checked below.
struct DworkCouple {
  std::function<Rat(long r, long n)> a_fn;  // n >= 0
  std::function<Rat(long r, long n)> g_fn;  // n >= 0
  long k0 = 0;
  long p = 2;

  Rat a(long r, long n) const { return n < 0 ? Rat(0) : a_fn(r, n); }
  Rat g(long r, long n) const { return g_fn(r, n); }
};

/// A_r = Q, g_r = p^mu_p, k0 = lambda_p; the couple the factorial-ratio
/// theorems instantiate.
DworkCouple concrete_couple(const FactorialRatioSpec& spec, long p);

/// A == 1, g == 1, k0 = 0.
DworkCouple constant_couple(long p);

/// A_r(a+jp) A_{r+1}(K-j) - A_{r+1}(j) A_r(a+p(K-j)); oriented so that the
/// concrete couple reproduces padic::s_sum.
Rat u_term(const DworkCouple& couple, long r, long a, long K, long j);

/// sum of u_term over j in [m p^s, (m+1)p^s).
Rat s_r_sum(const DworkCouple& couple, long r, long a, long K, long s, long m);

enum class Condition { i, ii, iii_high, iii_low, iv_a, iv_b, conclusion };

std::string condition_name(Condition c);

struct Violation {
  Condition condition;
  std::vector<long> params;
  long observed_valuation;  // vp_infinity when the quantity is 0
  long required_valuation;
};

struct HypothesisReport {
  std::vector<Violation> violations;
  long checks = 0;
  long skipped = 0;  // tuples beyond max_argument
  bool empty() const { return violations.empty(); }
};

/// Exhaustive within bounds. u always runs over [0, p^s), v over [0, p).
/// Tuples whose largest sequence argument would exceed max_argument are
/// counted as skipped instead of evaluated.
struct Grid {
  long s_max = 2;
  long m_max = 6;
  long r_max = 2;
  long k_max = 30;  // K range for the conclusion
  long max_argument = 200000;
};

HypothesisReport check_hypotheses(const DworkCouple& couple, const Grid& grid,
                                  int threads = 1);

HypothesisReport check_conclusion(const DworkCouple& couple, const Grid& grid,
                                  int threads = 1);

}  // namespace mirrormap::dwork

#endif
