#include "pearson4/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pearson4/quadrature.hpp"

namespace pearson4 {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;
}  // namespace

void NumericCdf::finalize(std::vector<double> masses) {
    const std::size_t n = x_.size();
    f_.assign(n, 0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        acc += std::max(masses[k], 0.0);
        f_[k + 1] = acc;
    }
    if (!(acc > 0.0))
        throw std::runtime_error("NumericCdf: zero total mass");
    for (double& v : f_) v /= acc;
    f_.back() = 1.0;

    // Fritsch-Carlson monotone cubic slopes.
    slope_.assign(n, 0.0);
    std::vector<double> d(n - 1), h(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = x_[k + 1] - x_[k];
        d[k] = (f_[k + 1] - f_[k]) / h[k];
    }
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (d[k - 1] <= 0.0 || d[k] <= 0.0) {
            slope_[k] = 0.0;
        } else {
            const double w1 = 2.0 * h[k] + h[k - 1];
            const double w2 = h[k] + 2.0 * h[k - 1];
            slope_[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
        }
    }
}

NumericCdf NumericCdf::pearson(const PearsonParams& p, int nodes) {
    NumericCdf cdf;
    cdf.arctan_arg_ = true;
    cdf.tol_ = 1e-8;
    if (p.a >= 1.0) {
        cdf.x_.resize(nodes);
        for (int k = 0; k < nodes; ++k)
            cdf.x_[k] = -kHalfPi + kPi * static_cast<double>(k) / (nodes - 1);
        cdf.x_.front() = -kHalfPi;
        cdf.x_.back() = kHalfPi;
    } else {
        // For a < 1 the cumulative grows like z^{2a-1} off the endpoints
        // (z = pi/2 - |y|), so uniform y-nodes leave macroscopic mass inside
        // the outermost cells and the interpolant misplaces it. Grade the
        // tail nodes uniformly in t = z^{2a-1}, which equalizes cell masses;
        // a monotone interpolant is then wrong by at most one cell's mass.
        const double q = 2.0 * p.a - 1.0;
        const double cut = 0.5;
        const int mid = nodes / 2 + 1, tail = nodes / 4;
        cdf.x_.push_back(-kHalfPi);
        for (int k = 1; k <= tail; ++k)
            cdf.x_.push_back(-kHalfPi +
                             cut * std::pow(static_cast<double>(k) / tail, 1.0 / q));
        for (int k = 1; k + 1 < mid; ++k)
            cdf.x_.push_back(-(kHalfPi - cut) +
                             (kPi - 2.0 * cut) * static_cast<double>(k) / (mid - 1));
        for (int k = tail; k >= 1; --k)
            cdf.x_.push_back(kHalfPi -
                             cut * std::pow(static_cast<double>(k) / tail, 1.0 / q));
        cdf.x_.push_back(kHalfPi);
        // graded spacings can collapse below one ulp near the endpoints
        cdf.x_.erase(std::unique(cdf.x_.begin(), cdf.x_.end()), cdf.x_.end());
        nodes = static_cast<int>(cdf.x_.size());
    }

    double shift;
    if (p.a > 1.0)
        shift = h_log_any(p, std::atan(p.s / (2.0 * (p.a - 1.0))));
    else
        shift = std::fabs(p.s) * kHalfPi;

    std::vector<double> masses(nodes - 1);
    for (int k = 0; k + 1 < nodes; ++k)
        masses[k] = h_mass(p, cdf.x_[k], cdf.x_[k + 1], shift, 1e-13);
    cdf.finalize(std::move(masses));
    return cdf;
}

NumericCdf NumericCdf::from_log_density(
    const std::function<double(double)>& log_pdf, double lo, double hi, int nodes) {
    if (!(lo < hi)) throw std::domain_error("NumericCdf: empty support");
    NumericCdf cdf;
    cdf.tol_ = 1e-8;
    cdf.x_.resize(nodes);
    double shift = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < nodes; ++k) {
        cdf.x_[k] = lo + (hi - lo) * static_cast<double>(k) / (nodes - 1);
        shift = std::max(shift, log_pdf(cdf.x_[k]));
    }
    auto f = [&](double x) {
        const double v = log_pdf(x) - shift;
        return std::isfinite(v) ? std::exp(v) : 0.0;
    };
    std::vector<double> masses(nodes - 1);
    for (int k = 0; k + 1 < nodes; ++k)
        masses[k] = adaptive_simpson(f, cdf.x_[k], cdf.x_[k + 1], 1e-13);
    cdf.finalize(std::move(masses));
    return cdf;
}

double NumericCdf::operator()(double x) const {
    const double q = arctan_arg_ ? std::atan(x) : x;
    if (q <= x_.front()) return 0.0;
    if (q >= x_.back()) return 1.0;
    const auto it = std::upper_bound(x_.begin(), x_.end(), q);
    const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[k + 1] - x_[k];
    const double t = (q - x_[k]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double v = f_[k] * (2.0 * t3 - 3.0 * t2 + 1.0) +
                     h * slope_[k] * (t3 - 2.0 * t2 + t) +
                     f_[k + 1] * (-2.0 * t3 + 3.0 * t2) +
                     h * slope_[k + 1] * (t3 - t2);
    return std::clamp(v, 0.0, 1.0);
}

double pearson_cdf_quadrature(const PearsonParams& p, double x) {
    double shift;
    if (p.a > 1.0)
        shift = h_log_any(p, std::atan(p.s / (2.0 * (p.a - 1.0))));
    else
        shift = std::fabs(p.s) * kHalfPi;
    const double total = h_mass(p, -kHalfPi, kHalfPi, shift);
    const double part = h_mass(p, -kHalfPi, std::atan(x), shift);
    return std::clamp(part / total, 0.0, 1.0);
}

KsResult ks_one_sample(const std::vector<double>& sorted_samples,
                       const std::function<double(double)>& cdf, double threshold) {
    const std::size_t n = sorted_samples.size();
    if (n == 0) throw std::domain_error("ks_one_sample: empty sample");
    if (threshold <= 0.0) threshold = 2.2 / std::sqrt(static_cast<double>(n));
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_samples[i]);
        d = std::max(d, (i + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return KsResult{d, n, 0, threshold, d <= threshold};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b,
                       double threshold) {
    const std::size_t n = a.size(), m = b.size();
    if (n == 0 || m == 0) throw std::domain_error("ks_two_sample: empty sample");
    if (threshold <= 0.0)
        threshold = 2.2 * std::sqrt(static_cast<double>(n + m) /
                                    (static_cast<double>(n) * static_cast<double>(m)));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < n && j < m) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / n -
                                  static_cast<double>(j) / m));
    }
    return KsResult{d, n, m, threshold, d <= threshold};
}

MomentCheck moment_check(const std::vector<double>& samples, double expected_mean,
                         double expected_variance) {
    if (!(expected_variance > 0.0) || !std::isfinite(expected_variance))
        throw std::domain_error("moment_check: needs finite positive variance");
    if (samples.empty()) throw std::domain_error("moment_check: empty sample");
    const std::size_t n = samples.size();
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    if (n > 1) {
        for (double v : samples) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n - 1);
    }
    const double se = std::sqrt(expected_variance / static_cast<double>(n));
    const double z = (mean - expected_mean) / se;
    return MomentCheck{std::fabs(z) <= 6.0, mean, var, z};
}

IterationStats iteration_stats(const SampleReport& report) {
    if (report.iterations.empty())
        throw std::domain_error("iteration_stats: empty report");
    constexpr std::size_t kBuckets = 32;
    IterationStats stats{0.0, 0, std::vector<std::uint64_t>(kBuckets, 0)};
    double sum = 0.0;
    for (std::uint64_t it : report.iterations) {
        sum += static_cast<double>(it);
        stats.max = std::max(stats.max, it);
        const std::size_t bucket = std::min<std::size_t>(it - 1, kBuckets - 1);
        ++stats.histogram[bucket];
    }
    stats.mean = sum / static_cast<double>(report.iterations.size());
    return stats;
}

}  // namespace pearson4
