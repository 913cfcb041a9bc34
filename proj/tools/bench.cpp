// Micro-benchmarks for the hot kernels: exhaustive enumeration (serial
// reference vs the blocked Gray-code kernel), naive Monte Carlo probability,
// and the grid-density convolution build. Prints one line per measurement.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "sklo/estimators.hpp"
#include "sklo/sk_model.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_of(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const std::string& name, double seconds) {
  std::printf("%-48s %10.3f s\n", name.c_str(), seconds);
  std::fflush(stdout);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("hardware threads available: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif

  using namespace sklo;

  {
    const auto inst = sk::sample_instance(18, 1);
    std::uint64_t serial_count = 0, parallel_count = 0;
    report("enumerate n=18, serial reference", time_of([&] {
             serial_count = sk::enumerate_local_optima_serial(inst).count;
           }));
    report("enumerate n=18, blocked Gray code (all threads)", time_of([&] {
             parallel_count = sk::enumerate_local_optima(inst).count;
           }));
    std::printf("  counts agree: %s (%llu)\n",
                serial_count == parallel_count ? "yes" : "NO",
                static_cast<unsigned long long>(serial_count));
  }

  {
    const std::uint64_t samples = 200000;
    report("mc probability n=12, 2e5 samples, 1 thread", time_of([&] {
             est::mc_local_opt_probability(12, samples, 99, 1);
           }));
    report("mc probability n=12, 2e5 samples, all threads", time_of([&] {
             est::mc_local_opt_probability(12, samples, 99, 0);
           }));
  }

  for (std::size_t n : {64, 256, 1024}) {
    report("density build n=" + std::to_string(n) + ", default step",
           time_of([&] { est::halfnormal_sum_density(n, est::default_grid_step(n)); }));
  }

  report("exponential moment n=1024 (density + integral)",
         time_of([&] { est::exp_moment_convolution(1024); }));

  return 0;
}
