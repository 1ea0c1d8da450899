#ifndef MIRRORMAP_SEARCH_HPP
#define MIRRORMAP_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mirrormap/landau.hpp"
#include "mirrormap/spec.hpp"

namespace mirrormap::search {

struct ScanConfig {
  long max_terms = 5;   // bound on q1 + q2
  long max_entry = 6;   // bound on every entry
  std::size_t order = 60;
  long prime_bound = 30;
};

struct ScanEntry {
  FactorialRatioSpec spec;
  landau::Classification classification;
};

/// Enumerates disjoint, weight-balanced specs with entries sorted descending,
/// classified via the Landau profile. Deterministic order.
std::vector<ScanEntry> scan_specs(const ScanConfig& cfg, int threads = 1);

/// Primes p <= prime_bound for which some coefficient of q through z^order
/// has negative p-adic valuation, with the least such index.
std::vector<std::pair<long, std::size_t>> find_bad_primes(const FactorialRatioSpec& spec,
                                                          long prime_bound,
                                                          std::size_t order,
                                                          int threads = 1);

enum class WitnessKind { phi_at_a, phi_l_at_a, phi_l_at_a_plus_p };

struct CaseIiWitness {
  long a;
  WitnessKind which;
};

/// For a CaseII spec and a prime p > M, finds a residue a with a/p in a zero
/// plateau, vp(Q(a)) = 0, and one of Phi_p(a), Phi_{L,p}(a), Phi_{L,p}(a+p)
/// outside p Z_p (tried in that order). Throws NoWitness when none exists.
CaseIiWitness case_ii_witness(const FactorialRatioSpec& spec, long p, long L);

}  // namespace mirrormap::search

#endif
