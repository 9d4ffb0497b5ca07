#pragma once

#include <stdexcept>

namespace pearson4 {

/// Shape pair of the Pearson IV density f(x) = gamma e^{s arctan x} / (1+x^2)^a.
/// Integrability requires a > 1/2; s may be any real, and (a,-s) describes
/// the mirror law of (a,s).
struct PearsonParams {
    double a;
    double s;

    PearsonParams(double a_, double s_) : a(a_), s(s_) {
        if (!(a > 0.5))
            throw std::domain_error("PearsonParams: requires a > 1/2");
    }

    PearsonParams reflected() const { return PearsonParams(a, -s); }
};

/// Two-sided bounds on the normalization constant (Batir + Boyd route);
/// certified for a >= 1, s >= 0 (negative s via |s|, the constant is even in s).
struct GammaBounds {
    double gamma_star;
    double gamma_minus;
    double gamma_plus;
};

/// Derived quantities of the arctan-mapped density
/// h(y) = gamma e^{sy} (cos^2 y)^{a-1} on [-pi/2, pi/2], valid for a >= 1.
/// At a = 1 the mode sits at the support boundary pi/2 and tau degenerates to 0.
struct ArctanMapped {
    PearsonParams params;
    double beta;    // s / (2(a-1)); +inf convention folded into mode_y at a = 1
    double mode_y;  // arctan(beta), or pi/2 when a = 1
    double tau;     // sqrt((a-1)(1+beta^2)) = sqrt(|g''(mode_y)|/2)

    explicit ArctanMapped(const PearsonParams& p);
};

struct Interval {
    double center;
    double half_width;
};

struct HDerivatives {
    double d1, d2, d3, d4;
};

/// s*arctan(x) - a*log(1+x^2); finite for all finite x.
double log_density(const PearsonParams& p, double x);
/// log_density plus log(gamma), i.e. the log of the normalized density.
double log_density_normalized(const PearsonParams& p, double x);

double mode(const PearsonParams& p);      // s / (2a)
double mean(const PearsonParams& p);      // requires a > 1
double variance(const PearsonParams& p);  // requires a > 3/2

/// Interval |x - s/(2a)| <= sqrt(1 + (s/2a)^2) on which (log f)'' <= 0.
Interval logconcavity_interval(const PearsonParams& p);

/// log of the unnormalized arctan-mapped density: s*y + (a-1)*log(cos^2 y)
/// on |y| <= pi/2, -infinity outside. Requires a >= 1 via ArctanMapped.
double h_log(const ArctanMapped& am, double y);

/// Same expression without the a >= 1 gate; for a in (1/2,1) it diverges to
/// +infinity at the endpoints (integrable singularity). Quadrature-side use.
double h_log_any(const PearsonParams& p, double y);

/// First four derivatives of g = log h at |y| < pi/2.
HDerivatives h_derivatives(const ArctanMapped& am, double y);

/// Fradelizi peak lower bound sqrt((4a^2+s^2)/(24(a+1))); certified
/// L <= h(mode) for the normalized h whenever a >= 1.
double peak_lower_bound_fradelizi(const PearsonParams& p);

/// Delta = h(mode)/gamma = e^{s m} (cos^2 m)^{a-1}, m = mode_y; a >= 1.
double delta(const PearsonParams& p);
double log_delta(const PearsonParams& p);

/// Normalization constant, two independent routes.
double log_gamma_lanczos(const PearsonParams& p);     // complex log-gamma route
double log_gamma_quadrature(const PearsonParams& p);  // adaptive Simpson route
/// Cross-checked value (throws if the routes disagree beyond 1e-6 relative).
double gamma_exact(const PearsonParams& p);

GammaBounds gamma_bounds(const PearsonParams& p);  // a >= 1
double log_gamma_star(const PearsonParams& p);
double log_gamma_minus(const PearsonParams& p);
double log_gamma_plus(const PearsonParams& p);

/// log of the folded tail density for a in (1/2, 1], up to log gamma:
/// log 2 + log cosh(s(pi/2 - z)) + 2(a-1) log sin(z), z in (0, pi/2].
double eta_log(const PearsonParams& p, double z);

/// Mass of exp(h_log_any) over [y0, y1] (subset of [-pi/2, pi/2]), scaled by
/// e^{-shift}. Handles the endpoint singularities at +-pi/2 for a < 1 by a
/// power substitution, so y0/y1 may equal the support endpoints.
double h_mass(const PearsonParams& p, double y0, double y1, double shift,
              double abs_tol = 1e-12);

}  // namespace pearson4
