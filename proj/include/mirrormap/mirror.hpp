#ifndef MIRRORMAP_MIRROR_HPP
#define MIRRORMAP_MIRROR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mirrormap/series.hpp"
#include "mirrormap/spec.hpp"

namespace mirrormap::mirror {

/// F, G, the type-mirror companions G_L and the canonical coordinate
/// q = z exp(G/F) with its siblings q_L = exp(G_L/F), all exact to `order`.
struct MirrorSeriesBundle {
  FactorialRatioSpec spec;
  std::size_t order = 0;
  TruncatedSeries f_series;               // F, constant term 1
  TruncatedSeries g_series;               // G, constant term 0
  TruncatedSeries log_ratio;              // G/F, shared by q
  TruncatedSeries q;                      // z exp(G/F); q[0] == 0, q[1] == 1
  std::vector<TruncatedSeries> g_l;       // G_L for L = 1..M at index L-1
  std::vector<TruncatedSeries> q_l;       // exp(G_L/F) for L = 1..M
};

MirrorSeriesBundle build_bundle(const FactorialRatioSpec& spec, std::size_t order);

/// z^{-1} q == prod_i q_{e_i}^{e_i} / prod_j q_{f_j}^{f_j}, exactly to the
/// bundle order.
bool product_identity_check(const MirrorSeriesBundle& bundle);

struct PrimeFinding {
  long p;
  std::optional<std::size_t> least_bad_index;  // least n with vp(coeff_n) < 0
};

struct IntegralityReport {
  std::vector<std::size_t> non_integer_indices;  // exact mode
  std::vector<PrimeFinding> per_prime;           // per-prime mode
};

enum class ReportMode { exact, per_prime };

IntegralityReport integrality_report(const TruncatedSeries& s, long prime_bound,
                                     ReportMode mode, int threads = 1);

/// F(z^p)/F(z)^p in 1 + p z Z_p[[z]] through order n (F(0) must be 1).
bool dieudonne_dwork_test(const TruncatedSeries& f, long p, std::size_t n);

/// All coefficients of h(z^p) - p h(z) up to order n have vp >= 1, for h with
/// h(0) = 0; with h = G/F this decides q in z Z_p[[z]].
bool exp_argument_congruence(const TruncatedSeries& h, long p, std::size_t n);

}  // namespace mirrormap::mirror

#endif
