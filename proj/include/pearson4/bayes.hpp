#pragma once

#include <optional>

#include "pearson4/logconcave.hpp"
#include "pearson4/pearson.hpp"
#include "pearson4/rng.hpp"

namespace pearson4 {

/// Conjugate-model state: a Pearson IV(mu0, m0) prior on the mean parameter
/// of the NEF-CHS sampling family with known sample size n. All formulas
/// extend to real n >= 1; integrality is nowhere required.
struct BayesParams {
    double mu0;
    double m0;
    double n;

    BayesParams(double mu0_, double m0_, double n_) : mu0(mu0_), m0(m0_), n(n_) {
        if (!(m0 > 1.0))
            throw std::domain_error("BayesParams: requires m0 > 1");
        if (!(n >= 1.0))
            throw std::domain_error("BayesParams: requires n >= 1");
    }
};

/// NEF-CHS(mu, n): mean n*mu, variance n*(mu^2+1).
struct ChsParams {
    double mu;
    double n;

    ChsParams(double mu_, double n_) : mu(mu_), n(n_) {
        if (!(n >= 1.0))
            throw std::domain_error("ChsParams: requires n >= 1");
    }
};

/// (a, s) = (m0/2 + 1, m0*mu0); the inverse map recovers (mu0, m0) exactly.
PearsonParams to_pearson(const BayesParams& b);

/// Normalizing constant of the Pearson IV(mu0, m0) density,
/// 4^{m0/2} |Gamma(m0/2 + 1 - i m0 mu0 / 2)|^2 / (pi Gamma(m0 + 1)).
double K_constant(double mu0, double m0);
double log_K(double mu0, double m0);

/// log H(x, n) for the convolved hyperbolic secant density:
/// (n-2) log 2 - log pi - log Gamma(n) + 2 Re log Gamma(n/2 + ix/2).
double chs_log_density(double x, double n);

/// log H(x,n) + x*arctan(mu) - (n/2)*log(mu^2+1); a normalized density.
double nef_chs_log_density(double x, const ChsParams& chs);

/// Mode of the NEF-CHS log-density by golden-section search (the density is
/// log-concave, hence unimodal).
double nef_chs_mode(const ChsParams& chs);

/// Exact NEF-CHS variate through the universal log-concave engine with the
/// Fradelizi peak bound L = 1/sqrt(12 n (mu^2+1)) from the exact variance.
Draw nef_chs_sample(RngState& state, const ChsParams& chs);

/// mu1 = (m0*mu0 + y)/(m0 + n), m1 = m0 + n; n carried over.
BayesParams posterior_update(const BayesParams& b, double y);

/// log f_Y(y) = log H(y,n) + log K(mu0,m0) - log K(mu1(y), m1).
double prior_predictive_log_density(const BayesParams& b, double y);

/// Two-step composition: mu ~ Pearson IV prior (or posterior given y),
/// then value ~ NEF-CHS(mu, n).
double predictive_sample(RngState& state, const BayesParams& b,
                         std::optional<double> conditioning_y = std::nullopt);

}  // namespace pearson4
