#pragma once

#include <cstdint>
#include <functional>

#include "pearson4/rng.hpp"

namespace pearson4 {

struct Draw {
    double value;
    std::uint64_t iterations;
};

/// Abstract unimodal log-concave target for the universal rejection method.
///   log_ratio(y) = log(h(y)/h(mode)), -infinity allowed outside the support
///   peak_bound   = L with 0 < L <= h(mode), h the normalized density
struct LogConcaveTarget {
    std::function<double(double)> log_ratio;
    double mode;
    double peak_bound;
};

/// Iterations after which sample() concludes the target contract is broken.
inline constexpr std::uint64_t kIterationCap = 1'000'000;

/// Universal rejection sampler for log-concave unimodal densities.
/// The envelope is min(h(m), h(m) e^{1 - L|y-m|}); acceptance runs in log
/// space, which is algebraically identical but immune to overflow in the
/// density ratio. envelope_log_scale shifts the log-envelope and exists only
/// for fault-injection tests; it must be 0 for correct sampling.
Draw sample(const LogConcaveTarget& target, RngState& state,
            double envelope_log_scale = 0.0);

}  // namespace pearson4
