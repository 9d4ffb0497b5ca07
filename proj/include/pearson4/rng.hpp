#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pearson4 {

/// Seedable source of the primitive random quantities consumed by every
/// sampler: uniforms, exponentials, standard normals, random signs, and
/// gamma variates with shape in (0,1].
///
/// Base generator: splitmix64 (Steele, Lea & Flood, 2014), a 64-bit
/// counter generator with fixed odd increment. Identical seeds give
/// bit-identical streams; stream(seed, k) derives independent streams
/// keyed by index, so batch generation is reproducible regardless of
/// thread scheduling.
///
/// Uniforms map the top 52 bits of an output word through
/// ((w >> 12) + 0.5) * 2^-52, which lands strictly inside (0,1): the
/// extremes are 2^-53 and 1 - 2^-53, both exactly representable, so
/// log(u) and 1/u are always finite.
///
/// normal() uses the Marsaglia polar method with the second variate
/// discarded; gamma_unit_shape() uses Marsaglia-Tsang (2000) at
/// shape+1 followed by the U^(1/shape) boost, exact on (0,1] with
/// uniformly bounded expected work.
class RngState {
public:
    explicit RngState(std::uint64_t seed) : state_(seed) {}

    /// Stream k of the given seed. The extra mix scatters the starting
    /// counters pseudo-randomly; without it stream k would simply be the
    /// seed stream advanced k steps, and streams drawn side by side would
    /// share overlapping windows of one sequence.
    static RngState stream(std::uint64_t seed, std::uint64_t k) {
        return RngState(mix(mix(seed) + k * kGamma));
    }

    std::uint64_t next_word() {
        state_ += kGamma;
        return mix(state_);
    }

    double uniform() {
        return (static_cast<double>(next_word() >> 12) + 0.5) * 0x1p-52;
    }

    double exponential() { return -std::log(uniform()); }

    double normal() {
        for (;;) {
            const double v1 = 2.0 * uniform() - 1.0;
            const double v2 = 2.0 * uniform() - 1.0;
            const double r = v1 * v1 + v2 * v2;
            if (r < 1.0 && r > 0.0)
                return v1 * std::sqrt(-2.0 * std::log(r) / r);
        }
    }

    double gamma_unit_shape(double shape) {
        if (!(shape > 0.0 && shape <= 1.0))
            throw std::domain_error("gamma_unit_shape: shape must lie in (0,1]");
        // Marsaglia-Tsang for shape+1, then boost down by U^(1/shape).
        const double d = shape + 1.0 - 1.0 / 3.0;
        const double c = 1.0 / (3.0 * std::sqrt(d));
        double g;
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) { g = d * v; break; }
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) { g = d * v; break; }
        }
        return g * std::exp(std::log(uniform()) / shape);
    }

    int random_sign() { return (next_word() >> 63) ? 1 : -1; }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30; z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27; z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace pearson4
