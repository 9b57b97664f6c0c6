// Compares the serial reference kernels against the OpenMP ones: the
// canonical DFS over directive words and the per-period repetition scan.

#include "epist/directive.hpp"
#include "epist/maximality.hpp"
#include "epist/oracle.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& fn) {
  auto t0 = Clock::now();
  fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%.2f\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

  {
    epist::SearchOptions opt;
    opt.budget = 2'000'000'000;
    epist::SearchResult a, b;
    double ts = time_ms([&] { a = epist::enumerate_max_serial(4, 14, opt); });
    double tp = time_ms([&] { b = epist::enumerate_max(4, 14, opt); });
    if (a.max_value != b.max_value || a.argmax != b.argmax) {
      std::printf("maxsearch kernels disagree!\n");
      return 1;
    }
    row("maxsearch d=4 N=14", ts, tp);
  }

  {
    epist::Word prefix = epist::standard_prefix(epist::dbonacci_directive(2), 20000);
    epist::oracle::RepetitionRecord a, b;
    double ts = time_ms([&] { a = epist::oracle::max_exponent_serial(prefix); });
    double tp = time_ms([&] { b = epist::oracle::max_exponent(prefix); });
    if (a.exponent != b.exponent || a.occurrence != b.occurrence || a.period != b.period) {
      std::printf("exponent kernels disagree!\n");
      return 1;
    }
    row("oracle exponent n=20000", ts, tp);
  }

  return 0;
}
