#ifndef MIRRORMAP_NUMERIC_HPP
#define MIRRORMAP_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace mirrormap {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Sentinel for the valuation of 0.
inline constexpr long vp_infinity = std::numeric_limits<long>::max();

/// num/den in lowest terms, den > 0. Accepts any den != 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "n" or "n/d".
Rat parse_rat(const std::string& s);

/// Canonical string form: "n" when den == 1, else "n/d".
std::string rat_str(const Rat& x);

bool is_integer(const Rat& x);

/// Floor division, b != 0.
Int floor_div(const Int& a, const Int& b);

Int floor_rat(const Rat& x);

/// x - floor(x), in [0, 1).
Rat frac_part(const Rat& x);

/// Exponent of p in n; vp_infinity for n == 0.
long vp_int(const Int& n, long p);

/// vp(num) - vp(den); vp_infinity for 0.
long vp_rat(const Rat& x, long p);

Int pow_int(const Int& base, unsigned long e);

/// base^e with e possibly negative (base != 0 then).
Rat pow_rat(const Rat& base, long e);

/// n!, memoized process-wide. Safe for concurrent callers.
const Int& factorial(unsigned long n);

/// H_n = sum_{i<=n} 1/i, memoized process-wide. H_0 = 0.
const Rat& harmonic(unsigned long n);

std::vector<long> primes_up_to(long bound);

bool is_prime(long n);

}  // namespace mirrormap

#endif
