#include "mirrormap/spec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mirrormap {

long FactorialRatioSpec::weight_e() const {
  return std::accumulate(e.begin(), e.end(), 0L);
}

long FactorialRatioSpec::weight_f() const {
  return std::accumulate(f.begin(), f.end(), 0L);
}

long FactorialRatioSpec::big_m() const {
  long m = 0;
  for (long v : e) m = std::max(m, v);
  for (long v : f) m = std::max(m, v);
  return m;
}

bool FactorialRatioSpec::all_positive() const {
  auto pos = [](long v) { return v >= 1; };
  return std::all_of(e.begin(), e.end(), pos) && std::all_of(f.begin(), f.end(), pos);
}

bool FactorialRatioSpec::disjoint() const {
  for (long a : e)
    for (long b : f)
      if (a == b) return false;
  return true;
}

bool FactorialRatioSpec::weight_balanced() const { return weight_e() == weight_f(); }

bool FactorialRatioSpec::valid_strict() const {
  return nonempty() && all_positive() && disjoint() && weight_balanced();
}

FactorialRatioSpec FactorialRatioSpec::canonical_sorted() const {
  FactorialRatioSpec s = *this;
  std::sort(s.e.begin(), s.e.end(), std::greater<>());
  std::sort(s.f.begin(), s.f.end(), std::greater<>());
  return s;
}

FactorialRatioSpec FactorialRatioSpec::cancelled() const {
  FactorialRatioSpec s = canonical_sorted();
  std::vector<long> ne, nf = s.f;
  for (long a : s.e) {
    auto it = std::find(nf.begin(), nf.end(), a);
    if (it != nf.end())
      nf.erase(it);
    else
      ne.push_back(a);
  }
  s.e = std::move(ne);
  s.f = std::move(nf);
  return s;
}

std::string FactorialRatioSpec::str() const {
  auto join = [](const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    return os.str();
  };
  return "e=(" + join(e) + ") f=(" + join(f) + ")";
}

FactorialRatioSpec FactorialRatioSpec::parse(const std::string& e_csv,
                                             const std::string& f_csv) {
  auto split = [](const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty entry in list: " + csv);
      out.push_back(std::stol(item));
    }
    return out;
  };
  return FactorialRatioSpec{split(e_csv), split(f_csv)};
}

Rat factorial_ratio_term(const FactorialRatioSpec& spec, long n) {
  if (n < 0) throw std::invalid_argument("factorial_ratio_term: n < 0");
  Int num = 1, den = 1;
  for (long ei : spec.e) num *= factorial(static_cast<unsigned long>(ei * n));
  for (long fj : spec.f) den *= factorial(static_cast<unsigned long>(fj * n));
  return make_rat(num, den);
}

Rat factorial_ratio_term_or_zero(const FactorialRatioSpec& spec, long n) {
  if (n < 0) return Rat(0);
  return factorial_ratio_term(spec, n);
}

}  // namespace mirrormap
