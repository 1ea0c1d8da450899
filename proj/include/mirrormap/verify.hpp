#ifndef MIRRORMAP_VERIFY_HPP
#define MIRRORMAP_VERIFY_HPP

#include <string>
#include <vector>

#include "mirrormap/spec.hpp"

namespace mirrormap::verify {

struct LemmaFailure {
  std::string lemma;
  std::string spec;
  std::vector<long> params;
};

struct SuiteReport {
  long checks = 0;
  long skipped = 0;  // tuples whose factorial arguments exceed max_argument
  std::vector<LemmaFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Sampled grid bounds for the statement-level lemma suite. Grids are
/// exhaustive within these bounds; enlarging them only adds checks.
struct SuiteConfig {
  std::vector<long> primes{2, 3, 5};
  std::size_t series_order = 24;  // Dieudonne-Dwork ratio test depth
  long k_max = 8;                 // K in the rewrite/decomposition identities
  long s_max = 2;
  long m_max = 4;
  long harmonic_m_max = 8;
  long eta_m_max = 6;
  long xy_s_max = 1;
  long gamma_n_max = 24;          // gamma function identity depth
  long residue_cap = 200;         // cap on c < p^s style residues
  long max_argument = 6000;       // cap on M * (largest Q argument); beyond -> skipped
};

/// Runs every lemma check that applies to the spec (some need the strong
/// Landau bound, some only weight balance) over the configured grids.
SuiteReport run_lemma_suite(const FactorialRatioSpec& spec, const SuiteConfig& cfg,
                            int threads = 1);

/// Prime-independent checks: the fractional-part lemma and the p-adic gamma
/// function identities.
SuiteReport run_arithmetic_suite(const SuiteConfig& cfg, int threads = 1);

/// vp(Q(n)) via Legendre equals the Landau-sum form for all n <= n_max and
/// the given primes.
SuiteReport vp_q_consistency(const FactorialRatioSpec& spec, long n_max,
                             const std::vector<long>& primes, int threads = 1);

}  // namespace mirrormap::verify

#endif
