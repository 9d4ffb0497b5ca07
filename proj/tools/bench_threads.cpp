// Compares the OpenMP batch kernel against the serial reference: verifies
// bit-exact agreement, then reports throughput for 1, 2, 4, ... threads.
//
// Usage: bench_threads [n] [a] [s]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pearson4/batch.hpp"

using namespace pearson4;

namespace {

double time_batch(const PearsonParams& p, std::size_t n, int threads,
                  bool serial, const SampleReport& reference) {
    const auto t0 = std::chrono::steady_clock::now();
    const SampleReport r = serial ? sample_batch_serial(p, AlgorithmId::Auto, n, 7)
                                  : sample_batch(p, AlgorithmId::Auto, n, 7, threads);
    const auto t1 = std::chrono::steady_clock::now();
    if (r.variates != reference.variates || r.iterations != reference.iterations) {
        std::fprintf(stderr, "FATAL: batch output differs from serial reference\n");
        std::exit(1);
    }
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 2'000'000;
    double a = 3.0, s = 3.0;
    if (argc > 1) n = std::stoull(argv[1]);
    if (argc > 2) a = std::stod(argv[2]);
    if (argc > 3) s = std::stod(argv[3]);
    const PearsonParams p(a, s);

    const SampleReport reference = sample_batch_serial(p, AlgorithmId::Auto, n, 7);
    std::printf("batch of %zu variates at (a=%g, s=%g), algorithm=auto\n", n, a, s);

    const double t_serial = time_batch(p, n, 1, true, reference);
    std::printf("%-12s %8.3f s  %8.1f Mvariates/s\n", "serial", t_serial,
                n / t_serial * 1e-6);

    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif
    for (int threads = 1; threads <= max_threads; threads *= 2) {
        const double t = time_batch(p, n, threads, false, reference);
        std::printf("omp x%-9d %8.3f s  %8.1f Mvariates/s  (speedup %.2fx)\n",
                    threads, t, n / t * 1e-6, t_serial / t);
        if (threads == max_threads) break;
        if (threads * 2 > max_threads) threads = max_threads / 2;
    }
    std::puts("all runs bit-exact against the serial reference");
    return 0;
}
