#include "mirrormap/landau.hpp"

#include <map>
#include <stdexcept>

#include "mirrormap/errors.hpp"

namespace mirrormap::landau {

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::invalid_spec: return "InvalidSpec";
    case CaseTag::not_integral_ratio: return "NotIntegralRatio";
    case CaseTag::case_i: return "CaseI";
    case CaseTag::case_ii: return "CaseII";
  }
  return "?";
}

long delta_at(const FactorialRatioSpec& spec, const Rat& x) {
  Int acc = 0;
  for (long ei : spec.e) acc += floor_rat(Rat(ei) * x);
  for (long fj : spec.f) acc -= floor_rat(Rat(fj) * x);
  return static_cast<long>(acc);
}

long amplitude_at(const FactorialRatioSpec& spec, const Rat& x) {
  long amp = 0;
  for (long ei : spec.e)
    if (is_integer(Rat(ei) * x)) ++amp;
  for (long fj : spec.f)
    if (is_integer(Rat(fj) * x)) --amp;
  return amp;
}

LandauProfile profile(const FactorialRatioSpec& spec) {
  if (!spec.all_positive()) throw std::invalid_argument("profile: entries must be >= 1");
  // Candidates j/d for d in e u f, 1 <= j <= d, deduplicated in lowest terms.
  std::map<Rat, long> jumps;
  auto add_candidates = [&](const std::vector<long>& side) {
    for (long d : side)
      for (long j = 1; j <= d; ++j) jumps.emplace(make_rat(j, d), 0);
  };
  add_candidates(spec.e);
  add_candidates(spec.f);

  LandauProfile prof;
  prof.big_m = spec.big_m();
  prof.plateaus.push_back(0);  // value on [0, gamma_1)
  long running = 0;
  for (auto& [gamma, amp] : jumps) {
    amp = amplitude_at(spec, gamma);
    if (amp == 0) continue;
    running += amp;
    prof.breakpoints.push_back(gamma);
    prof.amplitudes.push_back(amp);
    prof.plateaus.push_back(running);
  }
  return prof;
}

namespace {

// Plateau intervals are [gamma_k, gamma_{k+1}) with gamma_0 = 0 and the last
// one unbounded; Delta is right-continuous, so interval minima sit at plateau
// starts. Returns indices k (into prof.plateaus) whose interval meets
// [1/M, 1).
std::vector<std::size_t> plateaus_meeting_unit_window(const LandauProfile& prof) {
  std::vector<std::size_t> out;
  const Rat lo = make_rat(1, prof.big_m);
  const std::size_t t = prof.breakpoints.size();
  for (std::size_t k = 0; k <= t; ++k) {
    const Rat start = k == 0 ? Rat(0) : prof.breakpoints[k - 1];
    if (start >= 1) continue;
    if (k < t && prof.breakpoints[k] <= lo) continue;  // interval ends before 1/M
    out.push_back(k);
  }
  return out;
}

}  // namespace

Classification classify(const FactorialRatioSpec& spec, bool strict) {
  if (!spec.nonempty() || !spec.all_positive())
    return {CaseTag::invalid_spec, std::nullopt};
  if (strict && (!spec.disjoint() || !spec.weight_balanced()))
    return {CaseTag::invalid_spec, std::nullopt};

  const LandauProfile prof = profile(spec);

  // Delta >= 0 on [0,1]?
  for (std::size_t k = 0; k < prof.plateaus.size(); ++k) {
    if (prof.plateaus[k] <= -1) {
      const Rat witness = k == 0 ? Rat(0) : prof.breakpoints[k - 1];
      if (witness <= 1) return {CaseTag::not_integral_ratio, witness};
    }
  }

  // Minimum over [1/M, 1), attained at plateau starts.
  const Rat lo = make_rat(1, prof.big_m);
  long min_value = -1;
  std::optional<Rat> leftmost_zero;
  for (std::size_t k : plateaus_meeting_unit_window(prof)) {
    const long value = prof.plateaus[k];
    if (min_value < 0 || value < min_value) min_value = value;
    if (value == 0 && !leftmost_zero) {
      const Rat start = k == 0 ? Rat(0) : prof.breakpoints[k - 1];
      leftmost_zero = std::max(start, lo);
    }
  }
  if (min_value >= 1) return {CaseTag::case_i, std::nullopt};
  return {CaseTag::case_ii, leftmost_zero};
}

bool is_monotone_on_unit(const FactorialRatioSpec& spec) {
  const LandauProfile prof = profile(spec);
  for (std::size_t k = 0; k < prof.breakpoints.size(); ++k)
    if (prof.breakpoints[k] < 1 && prof.amplitudes[k] < 0) return false;
  return true;
}

Rat psi_at(const FactorialRatioSpec& spec, const Rat& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("psi_at: x must be in [0,1]");
  Rat acc = 0;
  for (long ei : spec.e) {
    const long top = static_cast<long>(floor_rat(Rat(ei) * x));
    for (long j = 1; j <= top; ++j) acc += make_rat(ei, j);
  }
  for (long fj : spec.f) {
    const long top = static_cast<long>(floor_rat(Rat(fj) * x));
    for (long j = 1; j <= top; ++j) acc -= make_rat(fj, j);
  }
  return acc;
}

Rat psi_jump_form(const LandauProfile& prof, const Rat& x) {
  Rat acc = 0;
  for (std::size_t k = 0; k < prof.breakpoints.size(); ++k) {
    if (prof.breakpoints[k] > x) break;
    acc += Rat(prof.amplitudes[k]) / prof.breakpoints[k];
  }
  return acc;
}

std::vector<std::size_t> zero_plateau_indices(const LandauProfile& prof) {
  std::vector<std::size_t> out;
  for (std::size_t k : plateaus_meeting_unit_window(prof))
    if (k >= 1 && prof.plateaus[k] == 0) out.push_back(k - 1);
  return out;
}

NewlemmaReport newlemma_check_at(const LandauProfile& prof, std::size_t i0) {
  NewlemmaReport rep;
  rep.i0 = i0;
  rep.sum = 0;
  rep.product = 1;
  for (std::size_t k = 0; k <= i0; ++k) {
    rep.sum += Rat(prof.amplitudes[k]) / prof.breakpoints[k];
    rep.product *= pow_rat(Rat(1) + Rat(1) / prof.breakpoints[k], prof.amplitudes[k]);
  }
  rep.sum_positive = rep.sum > 0;
  rep.product_gt_one = rep.product > 1;
  return rep;
}

NewlemmaReport newlemma_check(const FactorialRatioSpec& spec) {
  const Classification cls = classify(spec);
  if (cls.tag != CaseTag::case_ii) throw NoZeroPlateau(spec.str());
  const LandauProfile prof = profile(spec);
  const auto zeros = zero_plateau_indices(prof);
  if (zeros.empty()) throw NoZeroPlateau(spec.str());
  return newlemma_check_at(prof, zeros.front());
}

}  // namespace mirrormap::landau
