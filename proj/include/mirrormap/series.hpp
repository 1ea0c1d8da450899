#ifndef MIRRORMAP_SERIES_HPP
#define MIRRORMAP_SERIES_HPP

#include <cstddef>
#include <vector>

#include "mirrormap/numeric.hpp"

namespace mirrormap {

/// Exact-rational power series truncated at a fixed order: coefficients of
/// z^0 .. z^order. Binary operations truncate to the minimum order of the
/// operands.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TruncatedSeries(std::vector<Rat> coeffs);

  static TruncatedSeries constant(const Rat& c, std::size_t order);
  /// z truncated at `order` (order >= 1).
  static TruncatedSeries identity(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;

  bool is_zero() const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Rat> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rat& c);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Requires b[0] != 0; throws DivisionByNonUnit otherwise.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp of a series with zero constant term; throws ExpOfUnit otherwise.
/// Order-by-order recurrence from u' = f' u.
TruncatedSeries series_exp(const TruncatedSeries& f);

/// z -> z^p at unchanged truncation order.
TruncatedSeries series_substitute_zp(const TruncatedSeries& a, long p);

/// e >= 0.
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long e);

/// f(g(z)) for g with zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// d/dz, same order (top coefficient 0).
TruncatedSeries series_derivative(const TruncatedSeries& a);

/// Compositional inverse of s, which must have zero constant term and nonzero
/// linear coefficient; throws NotReversible otherwise. Newton iteration.
TruncatedSeries series_reversion(const TruncatedSeries& s);

/// Least index with a non-integer coefficient, or npos.
std::size_t first_non_integer_index(const TruncatedSeries& s);

/// Least index with vp(coefficient) < 0, or npos.
std::size_t first_negative_vp_index(const TruncatedSeries& s, long p);

inline constexpr std::size_t series_npos = static_cast<std::size_t>(-1);

}  // namespace mirrormap

#endif
