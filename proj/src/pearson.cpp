#include "pearson4/pearson.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "pearson4/quadrature.hpp"
#include "pearson4/special.hpp"

namespace pearson4 {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

ArctanMapped::ArctanMapped(const PearsonParams& p) : params(p) {
    if (!(p.a >= 1.0))
        throw std::domain_error("ArctanMapped: requires a >= 1 (use the eta-based path)");
    if (p.a > 1.0) {
        beta = p.s / (2.0 * (p.a - 1.0));
        mode_y = std::atan(beta);
        tau = std::sqrt((p.a - 1.0) * (1.0 + beta * beta));
    } else {
        // a = 1: h is proportional to e^{sy}, maximized at the support boundary.
        beta = std::numeric_limits<double>::infinity();
        mode_y = kHalfPi;
        tau = 0.0;
    }
}

double log_density(const PearsonParams& p, double x) {
    return p.s * std::atan(x) - p.a * std::log1p(x * x);
}

double log_density_normalized(const PearsonParams& p, double x) {
    return log_density(p, x) + log_gamma_lanczos(p);
}

double mode(const PearsonParams& p) { return p.s / (2.0 * p.a); }

double mean(const PearsonParams& p) {
    if (!(p.a > 1.0))
        throw std::domain_error("mean: undefined for a <= 1");
    return p.s / (2.0 * (p.a - 1.0));
}

double variance(const PearsonParams& p) {
    if (!(p.a > 1.5))
        throw std::domain_error("variance: undefined for a <= 3/2");
    const double am1 = p.a - 1.0;
    return (p.s * p.s + 4.0 * am1 * am1) / (4.0 * am1 * am1 * (2.0 * p.a - 3.0));
}

Interval logconcavity_interval(const PearsonParams& p) {
    const double m = mode(p);
    return Interval{m, std::sqrt(1.0 + m * m)};
}

double h_log_any(const PearsonParams& p, double y) {
    if (std::fabs(y) > kHalfPi) return kNegInf;
    if (p.a == 1.0) return p.s * y;
    const double c = std::fabs(std::cos(y));
    return p.s * y + (p.a - 1.0) * 2.0 * std::log(c);
}

double h_log(const ArctanMapped& am, double y) { return h_log_any(am.params, y); }

HDerivatives h_derivatives(const ArctanMapped& am, double y) {
    const double a = am.params.a, s = am.params.s;
    const double t = std::tan(y);
    const double c2 = std::cos(y) * std::cos(y);
    const double s2 = std::sin(y) * std::sin(y);
    HDerivatives d;
    d.d1 = s - 2.0 * (a - 1.0) * t;
    d.d2 = -2.0 * (a - 1.0) / c2;
    d.d3 = -4.0 * (a - 1.0) * t / c2;
    d.d4 = -4.0 * (a - 1.0) * (1.0 + 2.0 * s2) / (c2 * c2);
    return d;
}

double peak_lower_bound_fradelizi(const PearsonParams& p) {
    if (!(p.a >= 1.0))
        throw std::domain_error("peak_lower_bound_fradelizi: requires a >= 1");
    return std::sqrt((4.0 * p.a * p.a + p.s * p.s) / (24.0 * (p.a + 1.0)));
}

double log_delta(const PearsonParams& p) {
    if (!(p.a >= 1.0))
        throw std::domain_error("delta: requires a >= 1");
    if (p.a == 1.0) return p.s * kHalfPi;
    const double beta = p.s / (2.0 * (p.a - 1.0));
    // cos^2(arctan(beta)) = 1/(1+beta^2)
    return p.s * std::atan(beta) - (p.a - 1.0) * std::log1p(beta * beta);
}

double delta(const PearsonParams& p) { return std::exp(log_delta(p)); }

double log_gamma_lanczos(const PearsonParams& p) {
    const std::complex<double> z(p.a, -p.s / 2.0);
    return (p.a - 1.0) * std::log(4.0) + log_abs_gamma_sq(z) - std::log(kPi) -
           std::lgamma(2.0 * p.a - 1.0);
}

namespace {

// Integral over [z_lo, z_hi] (subset of [0, pi/2]) of
// exp(s_signed*(pi/2 - z) - shift) * (sin z)^{2a-2}, via the substitution
// t = z^{2a-1} which removes the a < 1 endpoint singularity at z = 0.
double folded_tail_mass(const PearsonParams& p, double s_signed, double z_lo,
                        double z_hi, double shift, double abs_tol) {
    const double q = 2.0 * p.a - 1.0;
    const double a2 = 2.0 * p.a - 2.0;
    auto integrand = [&](double t) {
        const double z = std::pow(t, 1.0 / q);
        const double sinc = (z > 0.0) ? std::sin(z) / z : 1.0;
        return std::exp(s_signed * (kHalfPi - z) - shift + a2 * std::log(sinc)) / q;
    };
    const double t_lo = (z_lo > 0.0) ? std::pow(z_lo, q) : 0.0;
    const double t_hi = std::pow(z_hi, q);
    return adaptive_simpson(integrand, t_lo, t_hi, abs_tol);
}

double direct_mass(const PearsonParams& p, double y0, double y1, double shift,
                   double abs_tol) {
    auto f = [&](double y) {
        const double v = h_log_any(p, y) - shift;
        return (v == kNegInf) ? 0.0 : std::exp(v);
    };
    // Split at the interior mode, if any, to help the recursion.
    double acc = 0.0;
    double split = y0;
    if (p.a > 1.0) {
        const double m = std::atan(p.s / (2.0 * (p.a - 1.0)));
        if (m > y0 && m < y1) split = m;
    }
    if (split > y0) {
        acc += adaptive_simpson(f, y0, split, abs_tol);
        acc += adaptive_simpson(f, split, y1, abs_tol);
    } else {
        acc += adaptive_simpson(f, y0, y1, abs_tol);
    }
    return acc;
}

}  // namespace

double h_mass(const PearsonParams& p, double y0, double y1, double shift,
              double abs_tol) {
    y0 = std::max(y0, -kHalfPi);
    y1 = std::min(y1, kHalfPi);
    if (!(y0 < y1)) return 0.0;
    if (p.a >= 1.0) return direct_mass(p, y0, y1, shift, abs_tol);

    // a in (1/2, 1): (cos y)^{2a-2} has integrable singularities at +-pi/2.
    const double cut = kHalfPi - 0.5;
    double acc = 0.0;
    if (y0 < -cut) {
        const double hi = std::min(y1, -cut);
        acc += folded_tail_mass(p, -p.s, y0 + kHalfPi, hi + kHalfPi, shift, abs_tol);
        y0 = hi;
    }
    if (!(y0 < y1)) return acc;
    if (y1 > cut) {
        const double lo = std::max(y0, cut);
        acc += folded_tail_mass(p, p.s, kHalfPi - y1, kHalfPi - lo, shift, abs_tol);
        y1 = lo;
    }
    if (y0 < y1) acc += direct_mass(p, y0, y1, shift, abs_tol);
    return acc;
}

double log_gamma_quadrature(const PearsonParams& p) {
    double shift;
    if (p.a > 1.0)
        shift = h_log_any(p, std::atan(p.s / (2.0 * (p.a - 1.0))));
    else
        shift = std::fabs(p.s) * kHalfPi;  // sup of s*y over the support
    const double mass = h_mass(p, -kHalfPi, kHalfPi, shift);
    return -(shift + std::log(mass));
}

double gamma_exact(const PearsonParams& p) {
    const double l = log_gamma_lanczos(p);
    const double q = log_gamma_quadrature(p);
    if (std::fabs(l - q) > 1e-6)
        throw std::runtime_error(
            "gamma_exact: log-gamma and quadrature routes disagree beyond 1e-6");
    return std::exp(l);
}

double log_gamma_star(const PearsonParams& p) {
    const double a = p.a, s = std::fabs(p.s);
    const double r = s / (2.0 * a);
    return std::log(a - 0.5) + (a - 0.5) * std::log1p(r * r) - s * std::atan(r) -
           0.5 * std::log(kPi / std::exp(1.0)) - a * std::log1p(1.0 / (2.0 * a)) -
           0.5 * std::log(a);
}

double log_gamma_plus(const PearsonParams& p) {
    const double a = p.a, s = std::fabs(p.s);
    const double rho = 3.0 / (2.0 * kPi * kPi * std::hypot(a, s / 2.0));
    return log_gamma_star(p) + 2.0 * std::log1p(rho) -
           0.5 * std::log1p(1.0 / (6.0 * a)) -
           0.5 * std::log1p(1.0 / (6.0 * (a + 0.5)));
}

double log_gamma_minus(const PearsonParams& p) {
    const double a = p.a, s = std::fabs(p.s);
    const double rho = 3.0 / (2.0 * kPi * kPi * std::hypot(a, s / 2.0));
    return log_gamma_star(p) + 2.0 * std::log1p(-rho) -
           0.5 * std::log1p(0.177 / a) - 0.5 * std::log1p(0.177 / (a + 0.5));
}

GammaBounds gamma_bounds(const PearsonParams& p) {
    return GammaBounds{std::exp(log_gamma_star(p)), std::exp(log_gamma_minus(p)),
                       std::exp(log_gamma_plus(p))};
}

double eta_log(const PearsonParams& p, double z) {
    if (!(p.a <= 1.0))
        throw std::domain_error("eta_log: requires a in (1/2, 1]");
    if (!(z > 0.0))
        throw std::domain_error("eta_log: requires z > 0");
    const double t = (p.a == 1.0) ? 0.0 : 2.0 * (p.a - 1.0) * std::log(std::sin(z));
    return std::log(2.0) + log_cosh(p.s * (kHalfPi - z)) + t;
}

}  // namespace pearson4
