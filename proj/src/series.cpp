#include "mirrormap/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "mirrormap/errors.hpp"

namespace mirrormap {

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs a constant term");
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
  TruncatedSeries s(order);
  s[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) s[i] = coeffs_[i];
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

namespace {
std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(common_order(a, b));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(common_order(a, b));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rat& c) {
  TruncatedSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = a[i] * c;
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = common_order(a, b);
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == 0) throw DivisionByNonUnit();
  const std::size_t n = common_order(a, b);
  TruncatedSeries q(n);
  for (std::size_t i = 0; i <= n; ++i) {
    Rat acc = a[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (q[k] == 0) continue;
      acc -= q[k] * b[i - k];
    }
    q[i] = acc / b[0];
  }
  return q;
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
  if (f[0] != 0) throw ExpOfUnit();
  const std::size_t n = f.order();
  TruncatedSeries u(n);
  u[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (f[k] == 0) continue;
      acc += Rat(static_cast<long>(k)) * f[k] * u[m - k];
    }
    u[m] = acc / Rat(static_cast<long>(m));
  }
  return u;
}

TruncatedSeries series_substitute_zp(const TruncatedSeries& a, long p) {
  if (p < 1) throw std::invalid_argument("substitute z^p: p must be >= 1");
  TruncatedSeries out(a.order());
  for (std::size_t i = 0; i * static_cast<std::size_t>(p) <= a.order(); ++i)
    out[i * static_cast<std::size_t>(p)] = a[i];
  return out;
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long e) {
  TruncatedSeries result = TruncatedSeries::constant(Rat(1), a.order());
  TruncatedSeries base = a;
  while (e > 0) {
    if (e & 1UL) result = series_mul(result, base);
    e >>= 1UL;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g[0] != 0)
    throw std::invalid_argument("compose: inner series must have zero constant term");
  const std::size_t n = common_order(f, g);
  // Horner: ((f_n g + f_{n-1}) g + ...) + f_0
  TruncatedSeries acc = TruncatedSeries::constant(f[n], n);
  for (std::size_t i = n; i-- > 0;) {
    acc = series_mul(acc, g);
    acc[0] += f[i];
  }
  return acc;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  TruncatedSeries out(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i)
    out[i - 1] = a[i] * Rat(static_cast<long>(i));
  return out;
}

TruncatedSeries series_reversion(const TruncatedSeries& s) {
  if (s[0] != 0) throw NotReversible("constant term must be zero");
  if (s.order() < 1 || s[1] == 0) throw NotReversible("linear coefficient is zero");
  const std::size_t n = s.order();
  // Newton: g <- g - (s(g) - z) / s'(g), doubling the trusted order.
  TruncatedSeries g(n);
  g[1] = Rat(1) / s[1];
  const TruncatedSeries z = TruncatedSeries::identity(n);
  const TruncatedSeries ds = series_derivative(s);
  for (std::size_t prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    TruncatedSeries err = series_sub(series_compose(s, g), z);
    TruncatedSeries slope = series_compose(ds, g);
    g = series_sub(g, series_div(err, slope));
    g = g.truncated(n);
  }
  return g;
}

std::size_t first_non_integer_index(const TruncatedSeries& s) {
  for (std::size_t i = 0; i <= s.order(); ++i)
    if (!is_integer(s[i])) return i;
  return series_npos;
}

std::size_t first_negative_vp_index(const TruncatedSeries& s, long p) {
  for (std::size_t i = 0; i <= s.order(); ++i)
    if (s[i] != 0 && vp_rat(s[i], p) < 0) return i;
  return series_npos;
}

}  // namespace mirrormap
