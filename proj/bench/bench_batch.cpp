// Compares the serial reference batch classifier against the OpenMP kernel
// on a synthetic corpus and cross-checks that both produce identical rows.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pec/batch.hpp"
#include "pec/synthesis.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::vector<pec::BatchItem>& items,
               std::vector<pec::BatchResult> (*kernel)(const std::vector<pec::BatchItem>&,
                                                       double),
               int reps, std::vector<pec::BatchResult>& last) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    last = kernel(items, pec::kDefaultEpsilon);
    auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool same_results(const std::vector<pec::BatchResult>& a,
                  const std::vector<pec::BatchResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].class_id != b[i].class_id || a[i].error != b[i].error) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 50000;
  int reps = argc > 2 ? std::atoi(argv[2]) : 5;

  std::vector<pec::BatchItem> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    items.push_back({pec::random_conic_float(1000 + i, 4.0), ""});
  }

  std::vector<pec::BatchResult> serial, parallel;
  double t_serial = time_ms(items, pec::classify_batch_serial, reps, serial);
  double t_parallel = time_ms(items, pec::classify_batch_parallel, reps, parallel);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("rows            %zu\n", n);
  std::printf("threads         %d\n", threads);
  std::printf("serial          %9.2f ms  (%.0f rows/ms)\n", t_serial, n / t_serial);
  std::printf("parallel        %9.2f ms  (%.0f rows/ms)\n", t_parallel, n / t_parallel);
  std::printf("speedup         %9.2fx\n", t_serial / t_parallel);
  std::printf("results match   %s\n", same_results(serial, parallel) ? "yes" : "NO");
  return same_results(serial, parallel) ? 0 : 1;
}
