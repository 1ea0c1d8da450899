// Timing comparison of the sequential reference path (threads = 1) against
// the OpenMP path for the grid-verification and prime-scan kernels.

#include <chrono>
#include <cstdio>
#include <functional>

#include "mirrormap/dwork.hpp"
#include "mirrormap/parallel.hpp"
#include "mirrormap/search.hpp"
#include "mirrormap/verify.hpp"

using namespace mirrormap;

namespace {

double time_ms(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, int threads) {
  std::printf("%-28s serial %8.1f ms   omp(%d) %8.1f ms   speedup %.2fx\n", name,
              serial_ms, threads, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  const int threads = hardware_threads();
  std::printf("hardware threads: %d\n", threads);

  const FactorialRatioSpec spec{{6}, {3, 2, 1}};

  {
    const auto couple = dwork::concrete_couple(spec, 5);
    dwork::Grid grid;
    grid.k_max = 20;
    dwork::HypothesisReport serial_report, parallel_report;
    const double s = time_ms([&] { serial_report = dwork::check_conclusion(couple, grid, 1); });
    const double p = time_ms([&] { parallel_report = dwork::check_conclusion(couple, grid, threads); });
    report("dwork conclusion grid", s, p, threads);
    if (!(serial_report.empty() && parallel_report.empty()))
      std::printf("  WARNING: report mismatch or violations\n");
  }

  {
    const auto couple = dwork::concrete_couple(spec, 5);
    dwork::Grid grid;
    dwork::HypothesisReport serial_report, parallel_report;
    const double s = time_ms([&] { serial_report = dwork::check_hypotheses(couple, grid, 1); });
    const double p = time_ms([&] { parallel_report = dwork::check_hypotheses(couple, grid, threads); });
    report("dwork hypothesis grid", s, p, threads);
    if (!(serial_report.empty() && parallel_report.empty()))
      std::printf("  WARNING: report mismatch or violations\n");
  }

  {
    const FactorialRatioSpec bad{{3}, {2, 1}};
    std::vector<std::pair<long, std::size_t>> a, b;
    const double s = time_ms([&] { a = search::find_bad_primes(bad, 60, 40, 1); });
    const double p = time_ms([&] { b = search::find_bad_primes(bad, 60, 40, threads); });
    report("bad-prime scan", s, p, threads);
    if (a != b) std::printf("  WARNING: scan results differ\n");
  }

  {
    verify::SuiteConfig cfg;
    verify::SuiteReport a, b;
    const double s = time_ms([&] { a = verify::run_lemma_suite(spec, cfg, 1); });
    const double p = time_ms([&] { b = verify::run_lemma_suite(spec, cfg, threads); });
    report("lemma suite", s, p, threads);
    if (a.checks != b.checks || !a.ok() || !b.ok())
      std::printf("  WARNING: suite mismatch or failures\n");
  }

  return 0;
}
