#include "mirrormap/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "mirrormap/errors.hpp"
#include "mirrormap/mirror.hpp"
#include "mirrormap/padic.hpp"
#include "mirrormap/parallel.hpp"

namespace mirrormap::search {

namespace {

/// Descending multisets with entries in [1, max_entry], sizes in
/// [1, max_size], weight capped by max_weight.
void enumerate_multisets(long max_entry, long max_size, long max_weight,
                         std::vector<long>& current,
                         std::vector<std::vector<long>>& out) {
  if (!current.empty()) out.push_back(current);
  if (static_cast<long>(current.size()) == max_size) return;
  const long cap = current.empty() ? max_entry : current.back();
  long used = 0;
  for (long v : current) used += v;
  for (long v = std::min(cap, max_weight - used); v >= 1; --v) {
    current.push_back(v);
    enumerate_multisets(max_entry, max_size, max_weight, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ScanEntry> scan_specs(const ScanConfig& cfg, int threads) {
  std::vector<ScanEntry> entries;
  if (cfg.max_terms < 2 || cfg.max_entry < 1) return entries;

  std::vector<std::vector<long>> sides;
  std::vector<long> scratch;
  enumerate_multisets(cfg.max_entry, cfg.max_terms - 1,
                      cfg.max_entry * cfg.max_terms, scratch, sides);

  for (const auto& e : sides) {
    const long weight = std::accumulate(e.begin(), e.end(), 0L);
    for (const auto& f : sides) {
      if (static_cast<long>(e.size() + f.size()) > cfg.max_terms) continue;
      if (std::accumulate(f.begin(), f.end(), 0L) != weight) continue;
      FactorialRatioSpec spec{e, f};
      if (!spec.disjoint()) continue;
      entries.push_back(ScanEntry{std::move(spec), {}});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const ScanEntry& a, const ScanEntry& b) {
    return std::tuple(a.spec.weight_e(), a.spec.e.size() + a.spec.f.size(), a.spec.e,
                      a.spec.f) < std::tuple(b.spec.weight_e(),
                                             b.spec.e.size() + b.spec.f.size(), b.spec.e,
                                             b.spec.f);
  });
  parallel_for(static_cast<long>(entries.size()), threads, [&](long i) {
    auto& entry = entries[static_cast<std::size_t>(i)];
    entry.classification = landau::classify(entry.spec);
  });
  return entries;
}

std::vector<std::pair<long, std::size_t>> find_bad_primes(const FactorialRatioSpec& spec,
                                                          long prime_bound,
                                                          std::size_t order,
                                                          int threads) {
  const mirror::MirrorSeriesBundle bundle = mirror::build_bundle(spec, order);
  const auto report =
      mirror::integrality_report(bundle.q, prime_bound, mirror::ReportMode::per_prime, threads);
  std::vector<std::pair<long, std::size_t>> out;
  for (const auto& finding : report.per_prime)
    if (finding.least_bad_index) out.emplace_back(finding.p, *finding.least_bad_index);
  return out;
}

CaseIiWitness case_ii_witness(const FactorialRatioSpec& spec, long p, long L) {
  const auto cls = landau::classify(spec);
  if (cls.tag != landau::CaseTag::case_ii)
    throw NoWitness("spec is not Case (ii): " + spec.str());
  if (!is_prime(p)) throw std::invalid_argument("case_ii_witness: p must be prime");
  const long m = spec.big_m();
  if (p <= m) throw NoWitness("prime " + std::to_string(p) + " not above M = " + std::to_string(m));
  if (L < 1 || L > m) throw std::invalid_argument("case_ii_witness: need 1 <= L <= M");

  for (long a = 1; a < p; ++a) {
    const Rat x = make_rat(a, p);
    if (x * m < 1) continue;  // below 1/M
    if (landau::delta_at(spec, x) != 0) continue;
    if (padic::vp_q_legendre(spec, a, p) != 0) continue;
    if (vp_rat(padic::phi(spec, p, a, 0), p) <= 0)
      return CaseIiWitness{a, WitnessKind::phi_at_a};
    if (vp_rat(padic::phi_l(spec, L, p, a, 0), p) <= 0)
      return CaseIiWitness{a, WitnessKind::phi_l_at_a};
    if (vp_rat(padic::phi_l(spec, L, p, a, 1), p) <= 0)
      return CaseIiWitness{a, WitnessKind::phi_l_at_a_plus_p};
  }
  throw NoWitness("no residue works for p = " + std::to_string(p) + ", L = " +
                  std::to_string(L) + " on " + spec.str());
}

}  // namespace mirrormap::search
