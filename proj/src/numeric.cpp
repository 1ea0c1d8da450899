#include "mirrormap/numeric.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace mirrormap {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  mpq_canonicalize(r.backend().data());
  return r;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string rat_str(const Rat& x) { return x.str(); }

bool is_integer(const Rat& x) { return denominator(x) == 1; }

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: zero divisor");
  const Int num = b > 0 ? a : Int(-a);
  const Int den = b > 0 ? b : Int(-b);
  Int q;
  mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
  return q;
}

Int floor_rat(const Rat& x) { return floor_div(numerator(x), denominator(x)); }

Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

long vp_int(const Int& n, long p) {
  if (p < 2) throw std::invalid_argument("vp_int: p must be >= 2");
  if (n == 0) return vp_infinity;
  Int reduced;
  const Int pz(p);
  auto count =
      mpz_remove(reduced.backend().data(), n.backend().data(), pz.backend().data());
  return static_cast<long>(count);
}

long vp_rat(const Rat& x, long p) {
  if (x == 0) return vp_infinity;
  return vp_int(numerator(x), p) - vp_int(denominator(x), p);
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), e);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::invalid_argument("pow_rat: 0 to negative power");
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat r = make_rat(pow_int(numerator(base), a), pow_int(denominator(base), a));
  if (e < 0) r = Rat(1) / r;
  return r;
}

namespace {

// Grow-only tables behind a shared_mutex; std::deque keeps references stable
// across growth, so returning const& after dropping the lock is safe.
std::shared_mutex factorial_mutex;
std::deque<Int> factorial_table{Int(1)};

std::shared_mutex harmonic_mutex;
std::deque<Rat> harmonic_table{Rat(0)};

}  // namespace

const Int& factorial(unsigned long n) {
  {
    std::shared_lock lock(factorial_mutex);
    if (n < factorial_table.size()) return factorial_table[n];
  }
  std::unique_lock lock(factorial_mutex);
  while (factorial_table.size() <= n) {
    factorial_table.push_back(factorial_table.back() *
                              Int(factorial_table.size()));
  }
  return factorial_table[n];
}

const Rat& harmonic(unsigned long n) {
  {
    std::shared_lock lock(harmonic_mutex);
    if (n < harmonic_table.size()) return harmonic_table[n];
  }
  std::unique_lock lock(harmonic_mutex);
  while (harmonic_table.size() <= n) {
    harmonic_table.push_back(harmonic_table.back() +
                             make_rat(1, Int(harmonic_table.size())));
  }
  return harmonic_table[n];
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace mirrormap
