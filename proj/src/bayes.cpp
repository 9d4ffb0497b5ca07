#include "pearson4/bayes.hpp"

#include <cmath>
#include <complex>

#include "pearson4/samplers.hpp"
#include "pearson4/special.hpp"

namespace pearson4 {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInvGolden = 0.61803398874989484820;
}  // namespace

PearsonParams to_pearson(const BayesParams& b) {
    return PearsonParams(b.m0 / 2.0 + 1.0, b.m0 * b.mu0);
}

double log_K(double mu0, double m0) {
    if (!(m0 > 0.0))
        throw std::domain_error("log_K: requires m0 > 0");
    const std::complex<double> z(m0 / 2.0 + 1.0, -m0 * mu0 / 2.0);
    return (m0 / 2.0) * std::log(4.0) + log_abs_gamma_sq(z) - std::log(kPi) -
           std::lgamma(m0 + 1.0);
}

double K_constant(double mu0, double m0) { return std::exp(log_K(mu0, m0)); }

double chs_log_density(double x, double n) {
    if (!(n >= 1.0))
        throw std::domain_error("chs_log_density: requires n >= 1");
    const std::complex<double> z(n / 2.0, x / 2.0);
    return (n - 2.0) * std::log(2.0) - std::log(kPi) - std::lgamma(n) +
           log_abs_gamma_sq(z);
}

double nef_chs_log_density(double x, const ChsParams& chs) {
    return chs_log_density(x, chs.n) + x * std::atan(chs.mu) -
           (chs.n / 2.0) * std::log1p(chs.mu * chs.mu);
}

double nef_chs_mode(const ChsParams& chs) {
    const double sigma = std::sqrt(chs.n * (chs.mu * chs.mu + 1.0));
    double radius = 10.0 * sigma;
    for (int attempt = 0; attempt < 8; ++attempt) {
        double lo = chs.n * chs.mu - radius;
        double hi = chs.n * chs.mu + radius;
        double x1 = hi - kInvGolden * (hi - lo);
        double x2 = lo + kInvGolden * (hi - lo);
        double f1 = nef_chs_log_density(x1, chs);
        double f2 = nef_chs_log_density(x2, chs);
        while (hi - lo > 1e-10) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2; f1 = f2;
                x2 = lo + kInvGolden * (hi - lo);
                f2 = nef_chs_log_density(x2, chs);
            } else {
                hi = x2;
                x2 = x1; f2 = f1;
                x1 = hi - kInvGolden * (hi - lo);
                f1 = nef_chs_log_density(x1, chs);
            }
        }
        const double x = 0.5 * (lo + hi);
        // widen and retry if the maximizer sits on the bracket boundary
        if (std::fabs(x - (chs.n * chs.mu - radius)) > 1e-6 * radius &&
            std::fabs(x - (chs.n * chs.mu + radius)) > 1e-6 * radius)
            return x;
        radius *= 4.0;
    }
    throw std::runtime_error("nef_chs_mode: bracket did not contain the mode");
}

Draw nef_chs_sample(RngState& state, const ChsParams& chs) {
    const double mode = nef_chs_mode(chs);
    const double peak = nef_chs_log_density(mode, chs);
    const double bound = 1.0 / std::sqrt(12.0 * chs.n * (chs.mu * chs.mu + 1.0));
    LogConcaveTarget target{
        [&](double x) { return nef_chs_log_density(x, chs) - peak; }, mode, bound};
    return sample(target, state);
}

BayesParams posterior_update(const BayesParams& b, double y) {
    return BayesParams((b.m0 * b.mu0 + y) / (b.m0 + b.n), b.m0 + b.n, b.n);
}

double prior_predictive_log_density(const BayesParams& b, double y) {
    const BayesParams post = posterior_update(b, y);
    return chs_log_density(y, b.n) + log_K(b.mu0, b.m0) - log_K(post.mu0, post.m0);
}

double predictive_sample(RngState& state, const BayesParams& b,
                         std::optional<double> conditioning_y) {
    const BayesParams eff = conditioning_y ? posterior_update(b, *conditioning_y) : b;
    const double mu = draw_pearson4(state, to_pearson(eff), AlgorithmId::Auto).value;
    return nef_chs_sample(state, ChsParams(mu, eff.n)).value;
}

}  // namespace pearson4
