#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pearson4/pearson.hpp"
#include "pearson4/samplers.hpp"

namespace pearson4 {

/// Quadrature-backed CDF oracle: a monotone table of cumulative masses with
/// monotone cubic (Fritsch-Carlson) interpolation between nodes. For Pearson
/// targets the table lives in arctan space, so heavy tails cost nothing.
/// Never calls any sampler; the KS comparisons below are therefore between
/// independently coded paths.
class NumericCdf {
public:
    static NumericCdf pearson(const PearsonParams& p, int nodes = 4097);

    /// Generic construction from a log-density on [lo, hi] (finite support or
    /// truncation bounds chosen by the caller).
    static NumericCdf from_log_density(const std::function<double(double)>& log_pdf,
                                       double lo, double hi, int nodes = 4097);

    double operator()(double x) const;

    double tolerance_achieved() const { return tol_; }

private:
    NumericCdf() = default;
    void finalize(std::vector<double> masses);

    std::vector<double> x_, f_, slope_;
    bool arctan_arg_ = false;
    double tol_ = 0.0;
};

/// Direct per-query quadrature of the Pearson CDF, for spot checks of the
/// table-based oracle.
double pearson_cdf_quadrature(const PearsonParams& p, double x);

struct KsResult {
    double statistic;
    std::size_t n;
    std::size_t m;  // 0 for one-sample
    double threshold;
    bool pass;
};

/// One-sample Kolmogorov-Smirnov statistic; samples must be sorted ascending.
/// Default threshold 2.2/sqrt(n) (asymptotic p ~ 1e-4).
KsResult ks_one_sample(const std::vector<double>& sorted_samples,
                       const std::function<double(double)>& cdf,
                       double threshold = 0.0);

/// Classical two-sample D with threshold 2.2*sqrt((n+m)/(n*m)).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                       double threshold = 0.0);

struct MomentCheck {
    bool pass;
    double sample_mean;
    double sample_variance;
    double z_mean;
};

/// pass iff |sample_mean - expected_mean| <= 6*sqrt(expected_variance/n).
MomentCheck moment_check(const std::vector<double>& samples, double expected_mean,
                         double expected_variance);

struct IterationStats {
    double mean;
    std::uint64_t max;
    std::vector<std::uint64_t> histogram;  // count of i+1 iterations; last bucket is overflow
};

IterationStats iteration_stats(const SampleReport& report);

}  // namespace pearson4
