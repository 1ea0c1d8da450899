#include "mirrormap/mirror.hpp"

#include <stdexcept>

#include "mirrormap/parallel.hpp"

namespace mirrormap::mirror {

MirrorSeriesBundle build_bundle(const FactorialRatioSpec& spec, std::size_t order) {
  if (order < 1) throw std::invalid_argument("build_bundle: order must be >= 1");
  if (!spec.all_positive() || !spec.nonempty())
    throw std::invalid_argument("build_bundle: invalid spec " + spec.str());

  MirrorSeriesBundle b;
  b.spec = spec;
  b.order = order;
  b.f_series = TruncatedSeries(order);
  b.g_series = TruncatedSeries(order);
  const long m = spec.big_m();
  b.g_l.assign(static_cast<std::size_t>(m), TruncatedSeries(order));

  for (std::size_t n = 0; n <= order; ++n) {
    const Rat qn = factorial_ratio_term(spec, static_cast<long>(n));
    b.f_series[n] = qn;
    if (n == 0) continue;
    Rat weight = 0;
    for (long ei : spec.e) weight += Rat(ei) * harmonic(ei * n);
    for (long fj : spec.f) weight -= Rat(fj) * harmonic(fj * n);
    b.g_series[n] = qn * weight;
    for (long l = 1; l <= m; ++l)
      b.g_l[static_cast<std::size_t>(l - 1)][n] = qn * harmonic(static_cast<unsigned long>(l) * n);
  }

  b.log_ratio = series_div(b.g_series, b.f_series);

  // q = z exp(G/F): shift exp(G/F) up by one, coefficient of z^0 is 0.
  const TruncatedSeries e = series_exp(b.log_ratio);
  b.q = TruncatedSeries(order);
  for (std::size_t n = 1; n <= order; ++n) b.q[n] = e[n - 1];

  b.q_l.reserve(static_cast<std::size_t>(m));
  for (long l = 1; l <= m; ++l)
    b.q_l.push_back(series_exp(series_div(b.g_l[static_cast<std::size_t>(l - 1)], b.f_series)));
  return b;
}

bool product_identity_check(const MirrorSeriesBundle& b) {
  TruncatedSeries num = TruncatedSeries::constant(Rat(1), b.order);
  TruncatedSeries den = num;
  for (long ei : b.spec.e)
    num = series_mul(num, series_pow(b.q_l[static_cast<std::size_t>(ei - 1)],
                                     static_cast<unsigned long>(ei)));
  for (long fj : b.spec.f)
    den = series_mul(den, series_pow(b.q_l[static_cast<std::size_t>(fj - 1)],
                                     static_cast<unsigned long>(fj)));
  return series_exp(b.log_ratio) == series_div(num, den);
}

IntegralityReport integrality_report(const TruncatedSeries& s, long prime_bound,
                                     ReportMode mode, int threads) {
  IntegralityReport report;
  if (mode == ReportMode::exact) {
    for (std::size_t i = 0; i <= s.order(); ++i)
      if (!is_integer(s[i])) report.non_integer_indices.push_back(i);
    return report;
  }
  const std::vector<long> primes = primes_up_to(prime_bound);
  report.per_prime.assign(primes.size(), PrimeFinding{});
  parallel_for(static_cast<long>(primes.size()), threads, [&](long i) {
    const long p = primes[static_cast<std::size_t>(i)];
    PrimeFinding finding{p, std::nullopt};
    const std::size_t idx = first_negative_vp_index(s, p);
    if (idx != series_npos) finding.least_bad_index = idx;
    report.per_prime[static_cast<std::size_t>(i)] = finding;
  });
  return report;
}

bool dieudonne_dwork_test(const TruncatedSeries& f, long p, std::size_t n) {
  if (f[0] != 1) throw std::invalid_argument("dieudonne_dwork_test: F(0) must be 1");
  if (f.order() < n) throw std::invalid_argument("dieudonne_dwork_test: order too small");
  const TruncatedSeries cut = f.truncated(n);
  const TruncatedSeries ratio =
      series_div(series_substitute_zp(cut, p), series_pow(cut, static_cast<unsigned long>(p)));
  for (std::size_t i = 1; i <= n; ++i)
    if (ratio[i] != 0 && vp_rat(ratio[i], p) < 1) return false;
  return true;
}

bool exp_argument_congruence(const TruncatedSeries& h, long p, std::size_t n) {
  if (h[0] != 0) throw std::invalid_argument("exp_argument_congruence: h(0) must be 0");
  const TruncatedSeries cut = h.truncated(n);
  const TruncatedSeries diff =
      series_sub(series_substitute_zp(cut, p), series_scale(cut, Rat(p)));
  for (std::size_t i = 1; i <= n; ++i)
    if (diff[i] != 0 && vp_rat(diff[i], p) < 1) return false;
  return true;
}

}  // namespace mirrormap::mirror
