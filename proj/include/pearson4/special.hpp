#pragma once

#include <cmath>
#include <complex>

namespace pearson4 {

/// log Gamma(z) for complex z with Re(z) > 0.
/// Lanczos approximation with Godfrey's g = 607/128, 15-coefficient set
/// (roughly 1e-14 relative over the right half plane).
std::complex<double> log_gamma_complex(std::complex<double> z);

/// log |Gamma(z)|^2 = 2 Re log Gamma(z), Re(z) > 0.
inline double log_abs_gamma_sq(std::complex<double> z) {
    return 2.0 * log_gamma_complex(z).real();
}

/// log cosh(t), stable for large |t|.
inline double log_cosh(double t) {
    const double u = std::fabs(t);
    return u + std::log1p(std::exp(-2.0 * u)) - std::log(2.0);
}

}  // namespace pearson4
