#include "mirrormap/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "mirrormap/landau.hpp"
#include "mirrormap/mirror.hpp"
#include "mirrormap/padic.hpp"
#include "mirrormap/parallel.hpp"

namespace mirrormap::verify {

namespace {

using Check = std::function<bool()>;

struct Task {
  std::string lemma;
  std::string spec;
  std::vector<long> params;
  Check check;
};

SuiteReport run(std::vector<Task> tasks, long skipped, int threads) {
  std::vector<std::optional<LemmaFailure>> slots(tasks.size());
  parallel_for(static_cast<long>(tasks.size()), threads, [&](long i) {
    auto& t = tasks[static_cast<std::size_t>(i)];
    if (!t.check()) slots[static_cast<std::size_t>(i)] = LemmaFailure{t.lemma, t.spec, t.params};
  });
  SuiteReport report;
  report.checks = static_cast<long>(tasks.size());
  report.skipped = skipped;
  for (auto& s : slots)
    if (s) report.failures.push_back(std::move(*s));
  return report;
}

long pow_l(long base, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

SuiteReport run_lemma_suite(const FactorialRatioSpec& spec, const SuiteConfig& cfg,
                            int threads) {
  std::vector<Task> tasks;
  long skipped = 0;
  const std::string name = spec.str();
  const long big_m = spec.big_m();
  const bool balanced = spec.weight_balanced() && spec.disjoint();
  const auto cls = landau::classify(spec);
  const bool strong = cls.tag == landau::CaseTag::case_i;  // Delta >= 1 on [1/M,1)
  // Largest factorial fed to a check is M * (largest Q argument).
  const auto fits = [&](long q_arg) { return big_m * q_arg <= cfg.max_argument; };

  // Dieudonne-Dwork: F in 1+zZ[[z]] iff F(z^p)/F(z)^p in 1+pzZ_p[[z]],
  // checked as a biconditional against the direct coefficient scan.
  {
    const auto bundle = mirror::build_bundle(spec, cfg.series_order);
    for (long p : cfg.primes) {
      tasks.push_back({"dieudonne_dwork", name, {p}, [bundle, p, &cfg]() {
        const bool ratio_ok = mirror::dieudonne_dwork_test(bundle.f_series, p, cfg.series_order);
        const bool coeff_ok =
            first_negative_vp_index(bundle.f_series, p) == series_npos;
        return ratio_ok == coeff_ok;
      }});
    }
  }

  for (long p : cfg.primes) {
    // Rewrite of Phi_{L,p} modulo p: needs the strong Landau bound.
    if (strong) {
      for (long l = 1; l <= big_m; ++l)
        for (long a = 0; a < p; ++a)
          for (long K = 0; K <= cfg.k_max; ++K) {
            if (!fits(a + K * p + p)) {
              ++skipped;
              continue;
            }
            tasks.push_back({"rewrite_congruence", name, {p, l, a, K}, [=]() {
              return padic::rewrite_congruence_check(spec, p, l, a, K);
            }});
          }
    }

    // Exact combinatorial decomposition of the H-weighted sum: any spec.
    for (long l = 1; l <= big_m; ++l)
      for (long a = 0; a < p; ++a)
        for (long K = 0; K <= cfg.k_max; ++K) {
          if (!fits(a + K * p + p)) {
            ++skipped;
            continue;
          }
          tasks.push_back({"w_decomposition", name, {p, l, a, K}, [=]() {
            return padic::w_decomposition_check(spec, p, l, a, K);
          }});
        }

    // Harmonic difference bound: only M enters.
    for (long l = 1; l <= big_m; ++l)
      for (long s = 0; s <= cfg.s_max; ++s)
        for (long m = 0; m <= cfg.harmonic_m_max; ++m)
          tasks.push_back({"harmonic_diff", name, {p, l, s, m}, [=]() {
            return padic::harmonic_diff_check(spec, p, l, s, m);
          }});

    if (balanced) {
      // Q(cp + m p^{s+1}) Q(c) / (Q(cp) Q(c + m p^s)) in 1 + p^{s+1} Z_p.
      for (long s = 0; s <= cfg.s_max; ++s) {
        const long c_hi = std::min(pow_l(p, s) - 1, cfg.residue_cap);
        for (long c = 0; c <= c_hi; ++c)
          for (long m = 0; m <= cfg.m_max; ++m) {
            if (!fits(c * p + m * pow_l(p, s + 1))) {
              ++skipped;
              continue;
            }
            tasks.push_back({"ratio_congruence", name, {p, s, c, m}, [=]() {
              return padic::ratio_congruence_check(spec, p, s, c, m);
            }});
          }
      }

      if (big_m >= 2) {
        const padic::PAdicContext ctx(spec, p);
        // X_s in Y_s (1 + p^{s+lambda+1} Z_p) and the eta formula for vp(Y).
        for (long s = 0; s <= cfg.xy_s_max; ++s)
          for (long v = 0; v < p; ++v)
            for (long u = 0; u < pow_l(p, s); ++u)
              for (long m = 0; m <= cfg.m_max; ++m) {
                if (!fits(v + u * p + m * pow_l(p, s + ctx.lambda_p + 1))) {
                  ++skipped;
                  continue;
                }
                tasks.push_back({"xy_valuation", name, {p, s, v, u, m}, [=]() {
                  return padic::xy_valuation_check(ctx, s, v, u, m);
                }});
              }

        // eta_{s+lambda+1}(a, 0) = 0 and the truncated valuation formulas
        // for vp(Q(a)) and vp(g(a)), a < p^{s+1}.
        for (long s = 0; s <= cfg.s_max; ++s) {
          const long a_hi = std::min(pow_l(p, s + 1) - 1, cfg.residue_cap);
          for (long a = 0; a <= a_hi; ++a)
            tasks.push_back({"eta_truncation", name, {p, s, a}, [=, lambda = ctx.lambda_p]() {
              if (padic::eta(spec, p, s + lambda + 1, a, 0) != 0) return false;
              long delta_sum = 0, mu_sum = 0;
              for (long l = 1; l <= s + lambda + 1; ++l) {
                const Rat fp = frac_part(make_rat(a, pow_l(p, l)));
                delta_sum += landau::delta_at(spec, fp);
                if (fp * big_m >= 1) ++mu_sum;
              }
              return padic::vp_q_legendre(spec, a, p) == delta_sum &&
                     padic::mu_p(spec, p, a) == mu_sum;
            }});
        }
      }
    }

    if (strong && big_m >= 2) {
      const padic::PAdicContext ctx(spec, p);
      // eta_{s+lambda+1}(a, m) >= mu(m p^lambda) and the quotient bound
      // vp(Q(a + m p^{s+lambda+1})) - mu(m p^lambda) >= truncated Delta sum,
      // via Legendre valuations only.
      for (long s = 0; s <= cfg.s_max; ++s) {
        const long a_hi = std::min(pow_l(p, s + 1) - 1, cfg.residue_cap);
        for (long a = 0; a <= a_hi; ++a)
          for (long m = 0; m <= cfg.eta_m_max; ++m)
            tasks.push_back({"eta_mu_quotient", name, {p, s, a, m}, [=, lambda = ctx.lambda_p]() {
              const long shifted_mu = padic::mu_p(spec, p, m * pow_l(p, lambda));
              if (padic::eta(spec, p, s + lambda + 1, a, m) < shifted_mu) return false;
              long delta_sum = 0;
              for (long l = 1; l <= s + lambda + 1; ++l)
                delta_sum += landau::delta_at(spec, frac_part(make_rat(a, pow_l(p, l))));
              const long big_arg = a + m * pow_l(p, s + lambda + 1);
              return padic::vp_q_legendre(spec, big_arg, p) - shifted_mu >= delta_sum;
            }});
      }

      // Q(a+jp) sum_{i<=floor(La/p)} 1/(Lj+i) in pZ_p.
      for (long l = 1; l <= big_m; ++l)
        for (long a = 0; a < p; ++a)
          for (long j = 0; j <= cfg.m_max; ++j)
            tasks.push_back({"q_rho", name, {p, l, a, j}, [=]() {
              return padic::q_rho_check(spec, p, l, a, j);
            }});
    }

    // Legendre vs Landau-sum valuation, small range (the acceptance suite
    // runs the deep scan).
    if (balanced) {
      for (long n = 0; n <= 40; ++n)
        tasks.push_back({"vp_q_methods", name, {p, n}, [=]() {
          return padic::vp_q_legendre(spec, n, p) == padic::vp_q_delta_sum(spec, n, p);
        }});
    }
  }

  return run(std::move(tasks), skipped, threads);
}

SuiteReport run_arithmetic_suite(const SuiteConfig& cfg, int threads) {
  std::vector<Task> tasks;

  for (long p : cfg.primes) {
    // (np)!/n! = p^n gamma_p(1+np).
    for (long n = 0; n <= cfg.gamma_n_max; ++n)
      tasks.push_back({"gamma_factorial", "", {p, n}, [=]() {
        const Rat lhs = make_rat(factorial(static_cast<unsigned long>(n * p)),
                                 factorial(static_cast<unsigned long>(n)));
        return lhs == Rat(pow_int(Int(p), static_cast<unsigned long>(n)) *
                          padic::gamma_p(1 + n * p, p));
      }});

    // Gamma_p(k + n p^s) = Gamma_p(k) mod p^s.
    for (long k = 1; k <= cfg.gamma_n_max; ++k)
      for (long n = 0; n <= cfg.gamma_n_max; ++n)
        for (long s = 0; s <= 3; ++s)
          tasks.push_back({"gamma_congruence", "", {p, k, n, s}, [=]() {
            const Int diff =
                padic::big_gamma_p(k + n * pow_l(p, s), p) - padic::big_gamma_p(k, p);
            return diff % pow_int(Int(p), static_cast<unsigned long>(s)) == 0;
          }});

    // Fractional-part lemma over several M.
    for (long big_m : {2L, 3L, 5L, 10L})
      for (long s = 1; s <= cfg.s_max + 1; ++s) {
        const long a_hi = std::min(pow_l(p, s) - 1, cfg.residue_cap);
        for (long a = 0; a <= a_hi; ++a)
          for (long l = 1; l <= big_m; ++l)
            for (long m = 0; m <= cfg.m_max * 2; ++m)
              tasks.push_back({"fractional_bound", "", {p, s, a, big_m, m, l}, [=]() {
                return padic::lemma24_fractional_check(p, s, a, big_m, m, l);
              }});
      }
  }

  return run(std::move(tasks), 0, threads);
}

SuiteReport vp_q_consistency(const FactorialRatioSpec& spec, long n_max,
                             const std::vector<long>& primes, int threads) {
  std::vector<Task> tasks;
  for (long p : primes)
    for (long n = 0; n <= n_max; ++n)
      tasks.push_back({"vp_q_methods", spec.str(), {p, n}, [=]() {
        return padic::vp_q_legendre(spec, n, p) == padic::vp_q_delta_sum(spec, n, p);
      }});
  return run(std::move(tasks), 0, threads);
}

}  // namespace mirrormap::verify
