#include "mirrormap/padic.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "mirrormap/errors.hpp"
#include "mirrormap/landau.hpp"

namespace mirrormap::padic {

namespace {

Rat q_term(const FactorialRatioSpec& spec, long n) {
  return factorial_ratio_term_or_zero(spec, n);
}

long checked_pow(long base, long exp) {
  long r = 1;
  for (long i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<long>::max() / base)
      throw std::overflow_error("power too large");
    r *= base;
  }
  return r;
}

}  // namespace

PAdicContext::PAdicContext(FactorialRatioSpec s, long prime)
    : spec(std::move(s)), p(prime), big_m(spec.big_m()) {
  if (!is_prime(p)) throw std::invalid_argument("PAdicContext: p must be prime");
  if (big_m < 2) throw std::invalid_argument("PAdicContext: needs M >= 2");
  long power = 1;  // p^lambda
  while (power * p < big_m) {
    power *= p;
    ++lambda_p;
  }
  // now p^lambda < M <= p^(lambda+1)
}

long vp_q_legendre(const FactorialRatioSpec& spec, long n, long p) {
  if (n < 0) throw std::invalid_argument("vp_q: n < 0");
  auto vp_factorial = [p](long m) {
    long acc = 0;
    for (long power = p; power <= m; power *= p) {
      acc += m / power;
      if (power > m / p) break;
    }
    return acc;
  };
  long acc = 0;
  for (long ei : spec.e) acc += vp_factorial(ei * n);
  for (long fj : spec.f) acc -= vp_factorial(fj * n);
  return acc;
}

long vp_q_delta_sum(const FactorialRatioSpec& spec, long n, long p) {
  if (n < 0) throw std::invalid_argument("vp_q: n < 0");
  if (n == 0) return 0;
  const Int m = spec.big_m();
  long acc = 0;
  for (Int power = p; power <= m * n; power *= p)
    acc += landau::delta_at(spec, frac_part(make_rat(n, power)));
  return acc;
}

long vp_q(const FactorialRatioSpec& spec, long n, long p, VpQMethod method) {
  return method == VpQMethod::legendre ? vp_q_legendre(spec, n, p)
                                       : vp_q_delta_sum(spec, n, p);
}

long mu_p(const FactorialRatioSpec& spec, long p, long m) {
  if (m < 0) throw std::invalid_argument("mu_p: m < 0");
  const Int big_m = spec.big_m();
  long mu = 0;
  for (Int power = p; power <= big_m * m; power *= p) {
    const Int r = Int(m) % power;
    if (big_m * r >= power) ++mu;
  }
  return mu;
}

MuG mu_and_g(const PAdicContext& ctx, long m) {
  const long mu = mu_p(ctx.spec, ctx.p, m);
  return MuG{mu, mu};
}

Rat phi(const FactorialRatioSpec& spec, long p, long a, long K) {
  if (a < 0 || a >= p) throw std::invalid_argument("phi: need 0 <= a < p");
  if (K < 0) throw std::invalid_argument("phi: K < 0");
  Rat acc = 0;
  for (long j = 0; j <= K; ++j) {
    const Rat pair = q_term(spec, K - j) * q_term(spec, a + j * p);
    if (pair == 0) continue;
    Rat weight = 0;
    for (long ei : spec.e)
      weight += Rat(ei) * (harmonic(ei * (K - j)) - Rat(p) * harmonic(ei * (a + j * p)));
    for (long fi : spec.f)
      weight -= Rat(fi) * (harmonic(fi * (K - j)) - Rat(p) * harmonic(fi * (a + j * p)));
    acc += pair * weight;
  }
  return acc;
}

Rat phi_l(const FactorialRatioSpec& spec, long L, long p, long a, long K) {
  if (a < 0 || a >= p) throw std::invalid_argument("phi_l: need 0 <= a < p");
  if (K < 0 || L < 1) throw std::invalid_argument("phi_l: bad K or L");
  Rat acc = 0;
  for (long j = 0; j <= K; ++j) {
    const Rat pair = q_term(spec, K - j) * q_term(spec, a + j * p);
    if (pair == 0) continue;
    acc += pair * (harmonic(L * (K - j)) - Rat(p) * harmonic(L * (a + j * p)));
  }
  return acc;
}

Rat s_sum(const FactorialRatioSpec& spec, long p, long a, long K, long s, long m) {
  if (a < 0 || a >= p) throw std::invalid_argument("s_sum: need 0 <= a < p");
  if (s < 0 || m < 0) throw std::invalid_argument("s_sum: bad s or m");
  const long block = checked_pow(p, s);
  Rat acc = 0;
  // Terms with j > K vanish: Q(K-j) = 0 and a+(K-j)p < 0.
  const long j_lo = m * block;
  const long j_hi = std::min((m + 1) * block - 1, K);
  for (long j = j_lo; j <= j_hi; ++j) {
    acc += q_term(spec, a + j * p) * q_term(spec, K - j);
    acc -= q_term(spec, j) * q_term(spec, a + (K - j) * p);
  }
  return acc;
}

namespace {

std::shared_mutex gamma_mutex;
std::map<long, std::deque<Int>> gamma_tables;  // p -> [gamma_p(1), gamma_p(2), ...]

}  // namespace

Int gamma_p(long n, long p) {
  if (n < 1) throw std::invalid_argument("gamma_p: n >= 1 required");
  {
    std::shared_lock lock(gamma_mutex);
    auto it = gamma_tables.find(p);
    if (it != gamma_tables.end() && static_cast<std::size_t>(n) <= it->second.size())
      return it->second[static_cast<std::size_t>(n - 1)];
  }
  std::unique_lock lock(gamma_mutex);
  auto& table = gamma_tables[p];
  if (table.empty()) table.push_back(Int(1));  // gamma_p(1): empty product
  while (table.size() < static_cast<std::size_t>(n)) {
    const long k = static_cast<long>(table.size());  // next index is k+1
    table.push_back(k % p == 0 ? table.back() : Int(table.back() * k));
  }
  return table[static_cast<std::size_t>(n - 1)];
}

Int big_gamma_p(long n, long p) {
  const Int g = gamma_p(n, p);
  return n % 2 == 0 ? g : Int(-g);
}

bool ratio_congruence_check(const FactorialRatioSpec& spec, long p, long s, long c,
                            long m) {
  if (s < 0 || c < 0 || m < 0) throw std::invalid_argument("ratio_congruence: bad args");
  if (c >= checked_pow(p, s)) throw std::invalid_argument("ratio_congruence: c >= p^s");
  const long ps = checked_pow(p, s);
  const Rat ratio = (q_term(spec, c) * q_term(spec, c * p + m * ps * p)) /
                    (q_term(spec, c * p) * q_term(spec, c + m * ps));
  if (ratio == 1) return true;
  return vp_rat(ratio - 1, p) >= s + 1;
}

long eta(const FactorialRatioSpec& spec, long p, long s, long a, long m) {
  if (s < 0 || a < 0 || m < 0) throw std::invalid_argument("eta: bad args");
  const Int arg = Int(a) + Int(m) * pow_int(Int(p), static_cast<unsigned long>(s));
  const Int big_m = spec.big_m();
  long acc = 0;
  Int power = pow_int(Int(p), static_cast<unsigned long>(s));
  for (power *= p; power <= big_m * arg; power *= p)
    acc += landau::delta_at(spec, frac_part(Rat(arg) / Rat(power)));
  return acc;
}

Rat x_quotient(const PAdicContext& ctx, long s, long v, long u, long m) {
  const auto& spec = ctx.spec;
  const long p = ctx.p;
  const Int shift_low = pow_int(Int(p), static_cast<unsigned long>(s + ctx.lambda_p));
  const Int low = Int(u) + Int(m) * shift_low;
  const Int high = Int(v) + Int(u) * p + Int(m) * shift_low * p;
  return (q_term(spec, v + u * p) * q_term(spec, static_cast<long>(low))) /
         (q_term(spec, u) * q_term(spec, static_cast<long>(high)));
}

Rat y_product(const PAdicContext& ctx, long s, long v, long u, long m) {
  const long p = ctx.p;
  const Int shift = Int(m) * pow_int(Int(p), static_cast<unsigned long>(s + ctx.lambda_p));
  auto side = [&](const std::vector<long>& entries) {
    Rat acc = 1;
    for (long d : entries) {
      const long top = (d * v) / p;
      for (long j = 1; j <= top; ++j) {
        const Rat factor = Rat(1) + Rat(Int(d) * shift) / Rat(d * u + j);
        if (factor == 0) throw DegenerateDenominator();
        acc *= factor;
      }
    }
    return acc;
  };
  return side(ctx.spec.f) / side(ctx.spec.e);
}

bool xy_valuation_check(const PAdicContext& ctx, long s, long v, long u, long m) {
  if (v < 0 || v >= ctx.p) throw std::invalid_argument("xy_check: need 0 <= v < p");
  if (u < 0 || u >= checked_pow(ctx.p, s))
    throw std::invalid_argument("xy_check: need 0 <= u < p^s");
  const Rat x = x_quotient(ctx, s, v, u, m);
  const Rat y = y_product(ctx, s, v, u, m);
  const Rat rel = x / y - 1;
  if (rel != 0 && vp_rat(rel, ctx.p) < s + ctx.lambda_p + 1) return false;

  const long t = s + ctx.lambda_p;
  const long expected = (eta(ctx.spec, ctx.p, t + 1, v + u * ctx.p, 0) -
                         eta(ctx.spec, ctx.p, t, u, 0)) -
                        (eta(ctx.spec, ctx.p, t + 1, v + u * ctx.p, m) -
                         eta(ctx.spec, ctx.p, t, u, m));
  return vp_rat(y, ctx.p) == expected;
}

bool harmonic_diff_check(const FactorialRatioSpec& spec, long p, long L, long s,
                         long m) {
  if (L < 1 || s < 0 || m < 0) throw std::invalid_argument("harmonic_diff: bad args");
  const long ps = checked_pow(p, s);
  const Rat diff = harmonic(static_cast<unsigned long>(L * m * ps)) -
                   harmonic(static_cast<unsigned long>(L * (m / p) * ps * p));
  if (diff == 0) return true;
  return s + 1 + mu_p(spec, p, m) + vp_rat(diff, p) >= 1;
}

namespace {

Rat h_weighted_sum(const FactorialRatioSpec& spec, long p, long L, long a, long K) {
  Rat acc = 0;
  for (long j = 0; j <= K; ++j) {
    const Rat bracket = q_term(spec, a + j * p) * q_term(spec, K - j) -
                        q_term(spec, j) * q_term(spec, a + (K - j) * p);
    if (bracket == 0) continue;
    acc += harmonic(static_cast<unsigned long>(L * j)) * bracket;
  }
  return acc;
}

}  // namespace

bool rewrite_congruence_check(const FactorialRatioSpec& spec, long p, long L, long a,
                              long K) {
  const Rat diff = phi_l(spec, L, p, a, K) - h_weighted_sum(spec, p, L, a, K);
  if (diff == 0) return true;
  return vp_rat(diff, p) >= 1;
}

bool w_decomposition_check(const FactorialRatioSpec& spec, long p, long L, long a,
                           long K) {
  if (K < 0) throw std::invalid_argument("w_decomposition: K < 0");
  long r = 0;
  while (checked_pow(p, r) <= K) ++r;  // minimal r with K < p^r
  Rat rhs = 0;
  for (long s = 0; s <= r; ++s) {
    const long ps = checked_pow(p, s);
    // m < p^(r+1-s); terms with m p^s > K have S = 0 and drop out.
    const long m_hi = std::min(checked_pow(p, r + 1 - s) - 1, K / ps);
    for (long m = 0; m <= m_hi; ++m) {
      const Rat s_val = s_sum(spec, p, a, K, s, m);
      if (s_val == 0) continue;
      rhs += (harmonic(static_cast<unsigned long>(L * m * ps)) -
              harmonic(static_cast<unsigned long>(L * (m / p) * ps * p))) *
             s_val;
    }
  }
  return h_weighted_sum(spec, p, L, a, K) == rhs;
}

bool q_rho_check(const FactorialRatioSpec& spec, long p, long L, long a, long j) {
  const long top = (L * a) / p;
  Rat sum = 0;
  for (long i = 1; i <= top; ++i) sum += make_rat(1, L * j + i);
  if (sum == 0) return true;
  return vp_q_legendre(spec, a + j * p, p) + vp_rat(sum, p) >= 1;
}

bool lemma24_fractional_check(long p, long s, long a, long big_m, long m, long L) {
  if (s < 1 || a < 0 || a >= checked_pow(p, s) || L < 1 || L > big_m)
    throw std::invalid_argument("lemma24: bad args");
  const long top = (L * a) / checked_pow(p, s);
  if (top < 1) return true;
  const Int arg = Int(a) + Int(m) * pow_int(Int(p), static_cast<unsigned long>(s));
  for (long u = 1; u <= top; ++u) {
    const long depth = vp_int(Int(L) * m + u, p);
    for (long l = s; l <= s + depth; ++l) {
      const Rat fp = frac_part(Rat(arg) / Rat(pow_int(Int(p), static_cast<unsigned long>(l))));
      if (fp < make_rat(1, big_m)) return false;
    }
  }
  return true;
}

NaiveDworkCounterexample naive_dwork_counterexample() {
  const FactorialRatioSpec spec{{10, 5}, {4, 4, 3, 2, 1, 1}};
  const long p = 3;
  auto q = [&](long n) { return factorial_ratio_term(spec, n); };
  const Rat lhs = harmonic(30) * (q(16) / q(7) - q(5) / q(2));
  const Rat rhs = Rat(1) / q(7);
  return NaiveDworkCounterexample{vp_rat(lhs, p), vp_rat(rhs, p)};
}

}  // namespace mirrormap::padic
