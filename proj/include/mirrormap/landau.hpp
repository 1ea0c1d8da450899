#ifndef MIRRORMAP_LANDAU_HPP
#define MIRRORMAP_LANDAU_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mirrormap/numeric.hpp"
#include "mirrormap/spec.hpp"

namespace mirrormap::landau {

/// Exact jump data of the step function Delta(x) = sum floor(e_i x) - sum
/// floor(f_j x) on (0, 1]. plateaus[k] is the value on [gamma_k, gamma_{k+1})
/// with gamma_0 = 0 and gamma_{t+1} = +inf, so plateaus has one more entry
/// than breakpoints and plateaus[0] == 0.
struct LandauProfile {
  std::vector<Rat> breakpoints;  // ascending, in (0, 1]
  std::vector<long> amplitudes;  // nonzero, aligned with breakpoints
  long big_m = 0;
  std::vector<long> plateaus;
};

enum class CaseTag { invalid_spec, not_integral_ratio, case_i, case_ii };

std::string case_tag_name(CaseTag tag);

struct Classification {
  CaseTag tag;
  /// NotIntegralRatio: an x with Delta(x) <= -1.
  /// CaseII: the leftmost x in [1/M, 1) with Delta(x) = 0.
  std::optional<Rat> witness;
};

/// Delta at any rational x, exact.
long delta_at(const FactorialRatioSpec& spec, const Rat& x);

/// Net jump of Delta at x: #{i : e_i x integer} - #{j : f_j x integer}.
long amplitude_at(const FactorialRatioSpec& spec, const Rat& x);

LandauProfile profile(const FactorialRatioSpec& spec);

/// strict mode demands positivity, disjointness and weight balance, returning
/// InvalidSpec otherwise; lax mode classifies any positive-entry spec.
Classification classify(const FactorialRatioSpec& spec, bool strict = true);

/// True iff every jump left of 1 is upward.
bool is_monotone_on_unit(const FactorialRatioSpec& spec);

/// Psi(x) = sum_i sum_{j<=floor(e_i x)} e_i/j - sum_i sum_{j<=floor(f_i x)} f_i/j.
Rat psi_at(const FactorialRatioSpec& spec, const Rat& x);

/// Equivalent jump form sum_{gamma_k <= x} m_k/gamma_k, used as a cross-check.
Rat psi_jump_form(const LandauProfile& prof, const Rat& x);

struct NewlemmaReport {
  bool sum_positive;
  bool product_gt_one;
  std::size_t i0;  // index into breakpoints of the zero-plateau start
  Rat sum;         // sum_{k<=i0} m_k/gamma_k
  Rat product;     // prod_{k<=i0} (1+1/gamma_k)^{m_k}
};

/// Indices k with plateaus[k+1] == 0 and [gamma_k, gamma_{k+1}) meeting [1/M, 1).
std::vector<std::size_t> zero_plateau_indices(const LandauProfile& prof);

NewlemmaReport newlemma_check_at(const LandauProfile& prof, std::size_t i0);

/// Evaluates both inequalities at the leftmost zero plateau; throws
/// NoZeroPlateau unless the spec is CaseII.
NewlemmaReport newlemma_check(const FactorialRatioSpec& spec);

}  // namespace mirrormap::landau

#endif
