#include "pearson4/batch.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pearson4 {

namespace {

SampleReport make_report(const PearsonParams& p, AlgorithmId algorithm,
                         std::size_t n, std::uint64_t seed) {
    SampleReport report{{}, {}, algorithm, p, seed};
    report.variates.resize(n);
    report.iterations.resize(n);
    return report;
}

}  // namespace

SampleReport sample_batch_serial(const PearsonParams& p, AlgorithmId algorithm,
                                 std::size_t n, std::uint64_t seed) {
    if (algorithm == AlgorithmId::Auto) algorithm = choose_algorithm(p);
    SampleReport report = make_report(p, algorithm, n, seed);
    for (std::size_t i = 0; i < n; ++i) {
        RngState state = RngState::stream(seed, i);
        const Draw d = draw_pearson4(state, p, algorithm);
        report.variates[i] = d.value;
        report.iterations[i] = d.iterations;
    }
    return report;
}

SampleReport sample_batch(const PearsonParams& p, AlgorithmId algorithm,
                          std::size_t n, std::uint64_t seed, int threads) {
    if (algorithm == AlgorithmId::Auto) algorithm = choose_algorithm(p);
    // validate the explicit-algorithm precondition once, before forking
    {
        RngState probe = RngState::stream(seed, 0);
        (void)draw_pearson4(probe, p, algorithm);
    }
    SampleReport report = make_report(p, algorithm, n, seed);
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(static)
#else
    (void)threads;
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        RngState state = RngState::stream(seed, static_cast<std::uint64_t>(i));
        const Draw d = draw_pearson4(state, p, algorithm);
        report.variates[static_cast<std::size_t>(i)] = d.value;
        report.iterations[static_cast<std::size_t>(i)] = d.iterations;
    }
    return report;
}

}  // namespace pearson4
