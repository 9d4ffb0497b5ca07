#include "pearson4/logconcave.hpp"

#include <cmath>
#include <stdexcept>

namespace pearson4 {

Draw sample(const LogConcaveTarget& target, RngState& state,
            double envelope_log_scale) {
    const double L = target.peak_bound;
    if (!(L > 0.0))
        throw std::domain_error("logconcave::sample: peak_bound must be positive");
    std::uint64_t iterations = 0;
    for (;;) {
        if (++iterations > kIterationCap)
            throw std::runtime_error(
                "logconcave::sample: iteration cap hit; target violates the "
                "log-concavity or peak-bound contract");
        double v = 4.0 * state.uniform() - 2.0;
        if (v < -1.0)
            v = -1.0 + std::log(v + 2.0);
        else if (v > 1.0)
            v = 1.0 - std::log(v - 1.0);
        const double y = target.mode + v / L;
        const double u = state.uniform();
        // envelope: log h(m) + min(0, 1 - L|y-m|), with L|y-m| = |v|
        const double log_env = std::min(0.0, 1.0 - std::fabs(v)) + envelope_log_scale;
        if (std::log(u) + log_env <= target.log_ratio(y))
            return Draw{y, iterations};
    }
}

}  // namespace pearson4
