#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pearson4/logconcave.hpp"
#include "pearson4/pearson.hpp"
#include "pearson4/rng.hpp"

namespace pearson4 {

enum class AlgorithmId {
    StudentTPolar,          // s = 0, any a: Bailey's polar one-liner
    T2Inverse,              // a = 3/2, s = 0: exact t_2 inversion
    SkewedCauchy,           // a = 1, any s: inversion one-liner
    Alg1StudentTRejection,  // any a, |s| <= 5 intended
    Alg2LogConcave,         // a >= 1, any s (universal)
    Alg3Exponential,        // 1 <= a <= 3, |s| <= 3 intended
    Alg4Gaussian,           // a > 1, |s| <= 3(a-1)/(2 pi)
    Alg5SmallA,             // a in (1/2, 1], any s
    Auto,
};

/// Choice of the certified peak lower bound L for the universal method.
enum class PeakBound {
    ExactPeak,        // L = h(mode) via the cross-checked normalization constant
    GammaMinusDelta,  // L = gamma^- * Delta, no normalization constant needed
    Fradelizi,        // L = sqrt((4a^2+s^2)/(24(a+1)))
};

struct SampleReport {
    std::vector<double> variates;
    std::vector<std::uint64_t> iterations;
    AlgorithmId algorithm_used;
    PearsonParams params;
    std::uint64_t seed;
};

// One-liners (iteration count is implicitly 1).
double student_t_polar(RngState& state, double nu);
double t2_inverse(RngState& state);
/// W with density proportional to e^{sy} on [-pi/2, pi/2]; tan(W) ~ P_{1,s}.
double skewed_cauchy_y(RngState& state, double s);

// Rejection algorithms; each handles s < 0 by sampling P_{a,|s|} and negating.
Draw alg1_student_rejection(RngState& state, const PearsonParams& p);
Draw alg2_logconcave(RngState& state, const PearsonParams& p,
                     PeakBound l_choice = PeakBound::GammaMinusDelta,
                     double envelope_log_scale = 0.0);
Draw alg3_exponential(RngState& state, const PearsonParams& p);
Draw alg4_gaussian(RngState& state, const PearsonParams& p);
Draw alg5_small_a(RngState& state, const PearsonParams& p);

/// The dispatcher policy covering the entire parameter space a > 1/2.
AlgorithmId choose_algorithm(const PearsonParams& p);

/// One variate by the requested algorithm (Auto applies the policy; explicit
/// ids enforce their validity regions and throw std::domain_error outside).
Draw draw_pearson4(RngState& state, const PearsonParams& p,
                   AlgorithmId algorithm = AlgorithmId::Auto);

SampleReport sample_pearson4(RngState& state, const PearsonParams& p,
                             AlgorithmId algorithm, std::size_t n,
                             std::uint64_t seed = 0);

const char* algorithm_name(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(const std::string& name);

}  // namespace pearson4
