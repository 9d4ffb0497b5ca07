#include "pearson4/special.hpp"

#include <stdexcept>

namespace pearson4 {

namespace {

// Godfrey's Lanczos coefficients, g = 607/128, N = 15.
constexpr double kG = 607.0 / 128.0;
constexpr double kCoef[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
const double kLogSqrt2Pi = 0.91893853320467274178;

}  // namespace

std::complex<double> log_gamma_complex(std::complex<double> z) {
    if (z.real() <= 0.0)
        throw std::domain_error("log_gamma_complex: requires Re(z) > 0");
    const std::complex<double> zm1 = z - 1.0;
    std::complex<double> sum = kCoef[0];
    for (int i = 1; i < 15; ++i)
        sum += kCoef[i] / (zm1 + static_cast<double>(i));
    const std::complex<double> t = zm1 + kG + 0.5;
    return kLogSqrt2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace pearson4
