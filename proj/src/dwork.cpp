#include "mirrormap/dwork.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "mirrormap/padic.hpp"
#include "mirrormap/parallel.hpp"

namespace mirrormap::dwork {

DworkCouple concrete_couple(const FactorialRatioSpec& spec, long p) {
  padic::PAdicContext ctx(spec, p);
  DworkCouple c;
  c.p = p;
  c.k0 = ctx.lambda_p;
  c.a_fn = [spec](long, long n) { return factorial_ratio_term(spec, n); };
  c.g_fn = [spec, p](long, long n) {
    return pow_rat(Rat(p), padic::mu_p(spec, p, n));
  };
  return c;
}

DworkCouple constant_couple(long p) {
  DworkCouple c;
  c.p = p;
  c.k0 = 0;
  c.a_fn = [](long, long) { return Rat(1); };
  c.g_fn = [](long, long) { return Rat(1); };
  return c;
}

Rat u_term(const DworkCouple& couple, long r, long a, long K, long j) {
  const long p = couple.p;
  return couple.a(r, a + j * p) * couple.a(r + 1, K - j) -
         couple.a(r + 1, j) * couple.a(r, a + p * (K - j));
}

Rat s_r_sum(const DworkCouple& couple, long r, long a, long K, long s, long m) {
  if (a < 0 || a >= couple.p) throw std::invalid_argument("s_r_sum: need 0 <= a < p");
  long block = 1;
  for (long i = 0; i < s; ++i) block *= couple.p;
  Rat acc = 0;
  // For j > K both products carry a negative argument (a < p), so they vanish.
  const long j_hi = std::min((m + 1) * block - 1, K);
  for (long j = m * block; j <= j_hi; ++j) acc += u_term(couple, r, a, K, j);
  return acc;
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::i: return "i";
    case Condition::ii: return "ii";
    case Condition::iii_high: return "iii_high";
    case Condition::iii_low: return "iii_low";
    case Condition::iv_a: return "iv_a";
    case Condition::iv_b: return "iv_b";
    case Condition::conclusion: return "conclusion";
  }
  return "?";
}

namespace {

long pow_l(long base, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

struct Task {
  Condition condition;
  std::vector<long> params;
};

long vp_or_inf(const Rat& x, long p) { return x == 0 ? vp_infinity : vp_rat(x, p); }

std::optional<Violation> run_task(const DworkCouple& c, const Task& t) {
  const long p = c.p;
  long observed = 0;
  long required = 0;
  switch (t.condition) {
    case Condition::i: {
      const long r = t.params[0];
      observed = vp_or_inf(c.a(r, 0), p);
      required = 0;
      if (observed == 0) return std::nullopt;
      return Violation{t.condition, t.params, observed, required};
    }
    case Condition::ii: {
      const long r = t.params[0], m = t.params[1];
      observed = vp_or_inf(c.a(r, m), p);
      required = vp_or_inf(c.g(r, m), p);
      break;
    }
    case Condition::iii_high: {
      const long r = t.params[0], v = t.params[1], u = t.params[2], s = t.params[3],
                 m = t.params[4];
      const long ps1 = pow_l(p, s + 1);
      const Rat lhs = c.a(r, v + u * p + m * ps1) / c.a(r, v + u * p) -
                      c.a(r + 1, u + m * (ps1 / p)) / c.a(r + 1, u);
      observed = vp_or_inf(lhs, p);
      required = s + c.k0 + 1 + vp_or_inf(c.g(r + s + 1, m), p) -
                 vp_or_inf(c.g(r, v + u * p), p);
      break;
    }
    case Condition::iii_low: {
      const long r = t.params[0], m = t.params[1];
      const Rat lhs = c.a(r, m * p) / c.a(r, 0) - c.a(r + 1, m) / c.a(r + 1, 0);
      observed = vp_or_inf(lhs, p);
      required = vp_int(Int(m), p) + 1 + vp_or_inf(c.g(r + 1, m), p);
      break;
    }
    case Condition::iv_a: {
      const long r = t.params[0], k = t.params[1], v = t.params[2], m = t.params[3];
      const long pk = pow_l(p, k);
      observed = vp_or_inf(c.g(r, v + m * pk), p);
      required = k + vp_or_inf(c.g(r, m * pk), p);
      break;
    }
    case Condition::iv_b: {
      const long r = t.params[0], k = t.params[1], m = t.params[2];
      observed = vp_or_inf(c.g(r, m * pow_l(p, k)), p);
      required = vp_or_inf(c.g(r + k, m), p);
      break;
    }
    case Condition::conclusion: {
      const long r = t.params[0], a = t.params[1], K = t.params[2], s = t.params[3],
                 m = t.params[4];
      observed = vp_or_inf(s_r_sum(c, r, a, K, s, m), p);
      required = s + 1 + vp_or_inf(c.g(s + r + 1, m), p);
      break;
    }
  }
  if (observed >= required) return std::nullopt;
  return Violation{t.condition, t.params, observed, required};
}

HypothesisReport run_tasks(const DworkCouple& couple, std::vector<Task> tasks,
                           long skipped, int threads) {
  std::vector<std::optional<Violation>> slots(tasks.size());
  parallel_for(static_cast<long>(tasks.size()), threads,
               [&](long i) { slots[static_cast<std::size_t>(i)] = run_task(couple, tasks[static_cast<std::size_t>(i)]); });
  HypothesisReport report;
  report.checks = static_cast<long>(tasks.size());
  report.skipped = skipped;
  for (auto& slot : slots)
    if (slot) report.violations.push_back(std::move(*slot));
  return report;
}

}  // namespace

HypothesisReport check_hypotheses(const DworkCouple& couple, const Grid& grid,
                                  int threads) {
  const long p = couple.p;
  const long k0 = couple.k0;
  std::vector<Task> tasks;
  long skipped = 0;

  for (long r = 0; r <= grid.r_max; ++r) tasks.push_back({Condition::i, {r}});

  const long m_span = grid.m_max * pow_l(p, k0);
  for (long r = 0; r <= grid.r_max; ++r)
    for (long m = 0; m <= m_span; ++m) tasks.push_back({Condition::ii, {r, m}});

  // Condition (iii): m <= m_max literally, plus multiples m' p^k0 to exercise
  // the high branch densely when k0 >= 1.
  std::set<long> m_values;
  for (long m = 0; m <= grid.m_max; ++m) {
    m_values.insert(m);
    m_values.insert(m * pow_l(p, k0));
  }
  for (long r = 0; r <= grid.r_max; ++r) {
    for (long m : m_values) {
      const bool high = m == 0 || vp_int(Int(m), p) >= k0;
      if (high) {
        for (long s = 0; s <= grid.s_max; ++s) {
          const long ps = pow_l(p, s);
          for (long v = 0; v < p; ++v)
            for (long u = 0; u < ps; ++u) {
              if (v + u * p + m * ps * p > grid.max_argument) {
                ++skipped;
                continue;
              }
              tasks.push_back({Condition::iii_high, {r, v, u, s, m}});
            }
        }
      } else {
        if (m * p > grid.max_argument) {
          ++skipped;
          continue;
        }
        tasks.push_back({Condition::iii_low, {r, m}});
      }
    }
  }

  for (long k = 1; k <= k0; ++k)
    for (long r = 0; r <= grid.r_max; ++r)
      for (long m = 0; m <= grid.m_max; ++m) {
        for (long v = 1; v < p; ++v) tasks.push_back({Condition::iv_a, {r, k, v, m}});
        tasks.push_back({Condition::iv_b, {r, k, m}});
      }

  return run_tasks(couple, std::move(tasks), skipped, threads);
}

HypothesisReport check_conclusion(const DworkCouple& couple, const Grid& grid,
                                  int threads) {
  const long p = couple.p;
  std::vector<Task> tasks;
  long skipped = 0;
  for (long r = 0; r <= grid.r_max; ++r)
    for (long a = 0; a < p; ++a)
      for (long K = 0; K <= grid.k_max; ++K)
        for (long s = 0; s <= grid.s_max; ++s)
          for (long m = 0; m <= grid.m_max; ++m) {
            if (a + (K + 1) * p > grid.max_argument) {
              ++skipped;
              continue;
            }
            tasks.push_back({Condition::conclusion, {r, a, K, s, m}});
          }
  return run_tasks(couple, std::move(tasks), skipped, threads);
}

}  // namespace mirrormap::dwork
