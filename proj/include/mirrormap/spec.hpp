#ifndef MIRRORMAP_SPEC_HPP
#define MIRRORMAP_SPEC_HPP

#include <string>
#include <vector>

#include "mirrormap/numeric.hpp"

namespace mirrormap {

/// The pair of positive-integer tuples (e, f) defining the factorial ratio
/// Q(n) = prod (e_i n)! / prod (f_j n)!.
struct FactorialRatioSpec {
  std::vector<long> e;
  std::vector<long> f;

  long weight_e() const;
  long weight_f() const;

  /// max over all entries of e and f.
  long big_m() const;

  bool all_positive() const;
  bool nonempty() const { return !e.empty() && !f.empty(); }

  /// No entry value shared between e and f (as multisets).
  bool disjoint() const;

  /// |e| == |f|.
  bool weight_balanced() const;

  /// nonempty, all entries >= 1, disjoint, weight balanced.
  bool valid_strict() const;

  /// Entries sorted descending; removes nothing.
  FactorialRatioSpec canonical_sorted() const;

  /// Cancels common e/f entries, then sorts descending.
  FactorialRatioSpec cancelled() const;

  std::string str() const;

  bool operator==(const FactorialRatioSpec&) const = default;

  /// Parses comma-separated entry lists, e.g. ("3,3", "2,1,1,1,1").
  static FactorialRatioSpec parse(const std::string& e_csv, const std::string& f_csv);
};

/// Q(n) for n >= 0. Exact; an integer whenever the Landau function is
/// nonnegative on [0,1].
Rat factorial_ratio_term(const FactorialRatioSpec& spec, long n);

/// Q(n) with the convention Q(n) = 0 for n < 0.
Rat factorial_ratio_term_or_zero(const FactorialRatioSpec& spec, long n);

}  // namespace mirrormap

#endif
