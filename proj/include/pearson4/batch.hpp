#pragma once

#include <cstdint>

#include "pearson4/samplers.hpp"

namespace pearson4 {

/// Batch generation with one derived RNG stream per variate
/// (RngState::stream(seed, i)), so the output is a pure function of
/// (params, algorithm, n, seed) and independent of thread count or
/// scheduling. sample_batch runs the loop with OpenMP when available;
/// sample_batch_serial is the reference implementation the parallel
/// kernel is tested against (bit-exact equality).
SampleReport sample_batch(const PearsonParams& p, AlgorithmId algorithm,
                          std::size_t n, std::uint64_t seed, int threads = 0);

SampleReport sample_batch_serial(const PearsonParams& p, AlgorithmId algorithm,
                                 std::size_t n, std::uint64_t seed);

}  // namespace pearson4
