#ifndef MIRRORMAP_HYPERGEOM_HPP
#define MIRRORMAP_HYPERGEOM_HPP

#include <utility>
#include <vector>

#include "mirrormap/numeric.hpp"
#include "mirrormap/spec.hpp"

namespace mirrormap::hypergeom {

/// Canonical Pochhammer-side data: alphas and betas sorted ascending, all in
/// (0, 1], common elements cancelled; C positive, reduced.
struct HypergeometricForm {
  std::vector<Rat> alphas;
  std::vector<Rat> betas;
  Rat constant_c{1};

  bool operator==(const HypergeometricForm&) const = default;
};

/// R_N = { w/N : 1 <= w <= N, gcd(w, N) = 1 }, phi(N) elements.
std::vector<Rat> r_set(long n);

/// C_N = N^phi(N) prod_{p | N} p^(phi(N)/(p-1)).
Int c_constant(long n);

struct RPartition {
  std::vector<long> blocks;  // multiset of N, descending
};

/// Groups by reduced denominator; each group must be a whole number of R_N
/// blocks. Throws NotRPartitionable otherwise.
RPartition r_partition(const std::vector<Rat>& multiset);

HypergeometricForm to_hypergeometric(const FactorialRatioSpec& spec);

/// Inverse conversion; checks R-partitionability of both sides and
/// C == C_alpha / C_beta (ConstantMismatch otherwise). Returns the maximally
/// cancelled spec, entries descending.
FactorialRatioSpec to_factorial(const HypergeometricForm& form);

/// (A_N, B_N): quotients of N by even-size (resp. odd-size) products of its
/// distinct primes; B_N carries phi(N) extra ones.
std::pair<std::vector<long>, std::vector<long>> zudilin_multisets(long n);

/// Signed exponent multiset of the Pochhammer symbols k/e_i (+) and k/f_j (-),
/// k running to the entry itself; equals the Landau jump profile.
std::vector<std::pair<Rat, long>> pochhammer_profile(const FactorialRatioSpec& spec);

struct EquivalenceReport {
  bool monotone;
  bool zudilin_form;
  bool all_betas_one;
};

/// Evaluates the three characterizations independently; throws
/// EquivalenceViolation if they ever disagree.
EquivalenceReport equivalence_check(const FactorialRatioSpec& spec);

/// (x)_n = x (x+1) ... (x+n-1).
Rat pochhammer(const Rat& x, long n);

/// C^n prod (alpha)_n / (n! prod (beta)_n).
Rat form_term(const HypergeometricForm& form, long n);

/// Whether the greedy Zudilin decomposition of (e, f) into (A_N, B_N) blocks
/// exists; fills blocks on success.
bool zudilin_decomposition(const FactorialRatioSpec& spec, std::vector<long>* blocks);

}  // namespace mirrormap::hypergeom

#endif
