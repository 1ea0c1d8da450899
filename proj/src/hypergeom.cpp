#include "mirrormap/hypergeom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mirrormap/errors.hpp"
#include "mirrormap/landau.hpp"

namespace mirrormap::hypergeom {

namespace {

std::vector<long> distinct_primes(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long euler_phi(long n) {
  long phi = n;
  for (long q : distinct_primes(n)) phi = phi / q * (q - 1);
  return phi;
}

/// Removes elements common to both multisets.
void cancel_common(std::vector<Rat>& a, std::vector<Rat>& b) {
  std::vector<Rat> keep;
  for (const Rat& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it != b.end())
      b.erase(it);
    else
      keep.push_back(x);
  }
  a = std::move(keep);
}

}  // namespace

std::vector<Rat> r_set(long n) {
  if (n < 1) throw std::invalid_argument("r_set: N >= 1 required");
  std::vector<Rat> out;
  for (long w = 1; w <= n; ++w)
    if (std::gcd(w, n) == 1) out.push_back(make_rat(w, n));
  return out;
}

Int c_constant(long n) {
  if (n < 1) throw std::invalid_argument("c_constant: N >= 1 required");
  const long phi = euler_phi(n);
  Int c = pow_int(Int(n), static_cast<unsigned long>(phi));
  for (long q : distinct_primes(n))
    c *= pow_int(Int(q), static_cast<unsigned long>(phi / (q - 1)));
  return c;
}

RPartition r_partition(const std::vector<Rat>& multiset) {
  std::map<long, std::map<Rat, long>> groups;  // denominator -> residue counts
  for (const Rat& x : multiset) {
    if (x <= 0 || x > 1) throw std::invalid_argument("r_partition: element outside (0,1]");
    groups[static_cast<long>(denominator(x))][x] += 1;
  }
  RPartition part;
  for (const auto& [den, counts] : groups) {
    const long phi = euler_phi(den);
    // The group must be k full copies of R_den: every coprime residue with
    // equal multiplicity k.
    const long k = counts.begin()->second;
    const bool uniform =
        static_cast<long>(counts.size()) == phi &&
        std::all_of(counts.begin(), counts.end(),
                    [&](const auto& kv) { return kv.second == k; });
    if (!uniform) {
      long have = 0;
      for (const auto& kv : counts) have += kv.second;
      throw NotRPartitionable(den, have, phi);
    }
    for (long i = 0; i < k; ++i) part.blocks.push_back(den);
  }
  std::sort(part.blocks.begin(), part.blocks.end(), std::greater<>());
  return part;
}

HypergeometricForm to_hypergeometric(const FactorialRatioSpec& spec) {
  if (!spec.all_positive() || spec.e.empty())
    throw std::invalid_argument("to_hypergeometric: invalid spec");
  HypergeometricForm form;
  for (long ei : spec.e)
    for (long k = 1; k < ei; ++k) form.alphas.push_back(make_rat(k, ei));
  for (long fj : spec.f)
    for (long k = 1; k < fj; ++k) form.betas.push_back(make_rat(k, fj));

  const long ones = static_cast<long>(spec.e.size()) - static_cast<long>(spec.f.size()) + 1;
  for (long i = 0; i < ones; ++i) form.alphas.push_back(Rat(1));
  for (long i = 0; i < -ones; ++i) form.betas.push_back(Rat(1));

  cancel_common(form.alphas, form.betas);
  std::sort(form.alphas.begin(), form.alphas.end());
  std::sort(form.betas.begin(), form.betas.end());

  form.constant_c = Rat(1);
  for (long ei : spec.e) form.constant_c *= pow_rat(Rat(ei), ei);
  for (long fj : spec.f) form.constant_c /= pow_rat(Rat(fj), fj);
  return form;
}

FactorialRatioSpec to_factorial(const HypergeometricForm& form) {
  const RPartition alpha_part = r_partition(form.alphas);
  const RPartition beta_part = r_partition(form.betas);

  Rat c_ratio = 1;
  for (long n : alpha_part.blocks) c_ratio *= Rat(c_constant(n));
  for (long n : beta_part.blocks) c_ratio /= Rat(c_constant(n));
  if (c_ratio != form.constant_c)
    throw ConstantMismatch("expected C_alpha/C_beta = " + rat_str(c_ratio) + ", form has " +
                           rat_str(form.constant_c));

  FactorialRatioSpec spec;
  long phi_balance = -1;  // exponent of the n! bookkeeping
  for (long n : alpha_part.blocks) {
    auto [a_n, b_n] = zudilin_multisets(n);
    spec.e.insert(spec.e.end(), a_n.begin(), a_n.end());
    spec.f.insert(spec.f.end(), b_n.begin(), b_n.end());
    phi_balance += euler_phi(n);
  }
  for (long n : beta_part.blocks) {
    auto [a_n, b_n] = zudilin_multisets(n);
    spec.f.insert(spec.f.end(), a_n.begin(), a_n.end());
    spec.e.insert(spec.e.end(), b_n.begin(), b_n.end());
    phi_balance -= euler_phi(n);
  }
  for (long i = 0; i < phi_balance; ++i) spec.e.push_back(1);
  for (long i = 0; i < -phi_balance; ++i) spec.f.push_back(1);
  return spec.cancelled();
}

std::pair<std::vector<long>, std::vector<long>> zudilin_multisets(long n) {
  if (n < 1) throw std::invalid_argument("zudilin_multisets: N >= 1 required");
  const std::vector<long> primes = distinct_primes(n);
  std::vector<long> a, b;
  const std::size_t count = primes.size();
  for (std::size_t mask = 0; mask < (1ULL << count); ++mask) {
    long divisor = 1;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1ULL << i)) divisor *= primes[i];
    const int bits = __builtin_popcountll(mask);
    (bits % 2 == 0 ? a : b).push_back(n / divisor);
  }
  for (long i = 0; i < euler_phi(n); ++i) b.push_back(1);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return {a, b};
}

std::vector<std::pair<Rat, long>> pochhammer_profile(const FactorialRatioSpec& spec) {
  std::map<Rat, long> exponents;
  for (long ei : spec.e)
    for (long k = 1; k <= ei; ++k) exponents[make_rat(k, ei)] += 1;
  for (long fj : spec.f)
    for (long k = 1; k <= fj; ++k) exponents[make_rat(k, fj)] -= 1;
  std::vector<std::pair<Rat, long>> out;
  for (const auto& [gamma, m] : exponents)
    if (m != 0) out.emplace_back(gamma, m);
  return out;
}

EquivalenceReport equivalence_check(const FactorialRatioSpec& spec) {
  if (!spec.disjoint() || !spec.weight_balanced())
    throw std::invalid_argument("equivalence_check: spec must be disjoint and balanced");
  EquivalenceReport rep{};
  rep.monotone = landau::is_monotone_on_unit(spec);
  rep.zudilin_form = zudilin_decomposition(spec, nullptr);
  const HypergeometricForm form = to_hypergeometric(spec);
  rep.all_betas_one = std::all_of(form.betas.begin(), form.betas.end(),
                                  [](const Rat& b) { return b == 1; });
  if (rep.monotone != rep.zudilin_form || rep.monotone != rep.all_betas_one)
    throw EquivalenceViolation(spec.str());
  return rep;
}

Rat pochhammer(const Rat& x, long n) {
  Rat acc = 1;
  for (long i = 0; i < n; ++i) acc *= x + Rat(i);
  return acc;
}

Rat form_term(const HypergeometricForm& form, long n) {
  Rat acc = pow_rat(form.constant_c, n);
  for (const Rat& a : form.alphas) acc *= pochhammer(a, n);
  for (const Rat& b : form.betas) acc /= pochhammer(b, n);
  return acc / Rat(factorial(static_cast<unsigned long>(n)));
}

bool zudilin_decomposition(const FactorialRatioSpec& spec, std::vector<long>* blocks) {
  // Greedy: the largest remaining e entry must be the next block N, since N
  // is the maximum of A_N and every B_N entry is < N.
  std::vector<long> e = spec.e, f = spec.f;
  std::sort(e.begin(), e.end(), std::greater<>());
  std::sort(f.begin(), f.end(), std::greater<>());
  std::vector<long> found;
  auto remove_all = [](std::vector<long>& from, const std::vector<long>& items) {
    for (long x : items) {
      auto it = std::find(from.begin(), from.end(), x);
      if (it == from.end()) return false;
      from.erase(it);
    }
    return true;
  };
  while (!e.empty()) {
    const long n = e.front();
    auto [a_n, b_n] = zudilin_multisets(n);
    if (!remove_all(e, a_n) || !remove_all(f, b_n)) return false;
    found.push_back(n);
  }
  if (!f.empty()) return false;
  if (blocks) *blocks = std::move(found);
  return true;
}

}  // namespace mirrormap::hypergeom
