#include "pearson4/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace pearson4 {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;

double alg4_beta_cap(double a) { return 3.0 * (a - 1.0) / (2.0 * kPi); }
}  // namespace

double student_t_polar(RngState& state, double nu) {
    if (!(nu > 0.0))
        throw std::domain_error("student_t_polar: requires nu > 0");
    const double u = state.uniform();
    const double up = state.uniform();
    return std::sqrt(nu) * std::sin(2.0 * kPi * up) *
           std::sqrt(std::pow(u, -2.0 / nu) - 1.0);
}

double t2_inverse(RngState& state) {
    const double u = state.uniform();
    return (2.0 * u - 1.0) / std::sqrt(2.0 * u * (1.0 - u));
}

double skewed_cauchy_y(RngState& state, double s) {
    if (s < 0.0) return -skewed_cauchy_y(state, -s);
    const double u = state.uniform();
    if (s < 1e-8) return kPi * (u - 0.5);
    // (1/s) log(e^{-s pi/2} + U(e^{s pi/2} - e^{-s pi/2})), rescaled to avoid
    // overflow of e^{s pi/2}.
    const double e = std::exp(-s * kPi);
    return kHalfPi + std::log(e + u * (1.0 - e)) / s;
}

Draw alg1_student_rejection(RngState& state, const PearsonParams& p) {
    if (p.s < 0.0) {
        Draw d = alg1_student_rejection(state, p.reflected());
        d.value = -d.value;
        return d;
    }
    const double nu = 2.0 * p.a - 1.0;
    const double scale = 1.0 / std::sqrt(nu);
    std::uint64_t iterations = 0;
    for (;;) {
        if (++iterations > kIterationCap)
            throw std::runtime_error("alg1_student_rejection: iteration cap hit");
        const double e = state.exponential();
        const double x = scale * student_t_polar(state, nu);
        if (e >= p.s * (kHalfPi - std::atan(x)))
            return Draw{x, iterations};
    }
}

Draw alg2_logconcave(RngState& state, const PearsonParams& p, PeakBound l_choice,
                     double envelope_log_scale) {
    if (p.s < 0.0) {
        Draw d = alg2_logconcave(state, p.reflected(), l_choice, envelope_log_scale);
        d.value = -d.value;
        return d;
    }
    const ArctanMapped am(p);  // enforces a >= 1
    double peak_bound;
    switch (l_choice) {
        case PeakBound::ExactPeak:
            peak_bound = std::exp(log_gamma_lanczos(p) + log_delta(p));
            break;
        case PeakBound::GammaMinusDelta:
            peak_bound = std::exp(log_gamma_minus(p) + log_delta(p));
            break;
        case PeakBound::Fradelizi:
            peak_bound = peak_lower_bound_fradelizi(p);
            break;
        default:
            throw std::domain_error("alg2_logconcave: unknown peak bound choice");
    }
    const double h_peak = h_log(am, am.mode_y);
    LogConcaveTarget target{
        [&](double y) { return h_log(am, y) - h_peak; }, am.mode_y, peak_bound};
    Draw d = sample(target, state, envelope_log_scale);
    d.value = std::tan(d.value);
    return d;
}

Draw alg3_exponential(RngState& state, const PearsonParams& p) {
    if (p.s < 0.0) {
        Draw d = alg3_exponential(state, p.reflected());
        d.value = -d.value;
        return d;
    }
    if (!(p.a >= 1.0))
        throw std::domain_error("alg3_exponential: requires a >= 1");
    const double expo = 2.0 * p.a - 2.0;
    std::uint64_t iterations = 0;
    for (;;) {
        if (++iterations > kIterationCap)
            throw std::runtime_error("alg3_exponential: iteration cap hit");
        const double v = state.uniform();
        double y;
        if (p.s < 1e-8) {
            y = kPi * (v - 0.5);  // s -> 0 limit of the inversion formula
        } else {
            // (1/s) log(V e^{s pi/2} + (1-V) e^{-s pi/2}), overflow-free form
            y = kHalfPi + std::log(v + (1.0 - v) * std::exp(-p.s * kPi)) / p.s;
        }
        const double u = state.uniform();
        if (std::log(u) <= expo * std::log(std::cos(y)))
            return Draw{std::tan(y), iterations};
    }
}

Draw alg4_gaussian(RngState& state, const PearsonParams& p) {
    if (p.s < 0.0) {
        Draw d = alg4_gaussian(state, p.reflected());
        d.value = -d.value;
        return d;
    }
    // Domination of the Gaussian envelope depends only on beta = s/(2(a-1)):
    // g(y) - g(m) + tau^2 (y-m)^2 / 2 = (a-1) * phi_beta(y), and phi_beta
    // changes sign at a universal beta* ~ 1.3917. Accept up to 1.35, safely
    // inside; the dispatcher stays on the conservative wedge beta <= 3/(4 pi).
    if (!(p.a > 1.0) || p.s > 2.0 * (p.a - 1.0) * 1.35 * (1.0 + 1e-12))
        throw std::domain_error(
            "alg4_gaussian: requires a > 1 and |s| <= 2.7(a-1)");
    const ArctanMapped am(p);
    const double h_peak = h_log(am, am.mode_y);
    std::uint64_t iterations = 0;
    if (am.tau >= std::sqrt(2.0 / kPi)) {
        for (;;) {
            if (++iterations > kIterationCap)
                throw std::runtime_error("alg4_gaussian: iteration cap hit");
            const double n = state.normal();
            const double u = state.uniform();
            const double y = am.mode_y + n / am.tau;
            // h_log is -inf outside the support, so those proposals auto-reject
            if (std::log(u) - 0.5 * n * n <= h_log(am, y) - h_peak)
                return Draw{std::tan(y), iterations};
        }
    }
    for (;;) {
        if (++iterations > kIterationCap)
            throw std::runtime_error("alg4_gaussian: iteration cap hit");
        const double y = kPi * (state.uniform() - 0.5);
        const double u = state.uniform();
        if (std::log(u) <= h_log(am, y) - h_peak)
            return Draw{std::tan(y), iterations};
    }
}

Draw alg5_small_a(RngState& state, const PearsonParams& p) {
    if (p.s < 0.0) {
        Draw d = alg5_small_a(state, p.reflected());
        d.value = -d.value;
        return d;
    }
    if (!(p.a <= 1.0))
        throw std::domain_error("alg5_small_a: requires a in (1/2, 1]");
    const double q = 2.0 * p.a - 1.0;
    // Z = pi/2 - |Y| has density on (0, pi/2] proportional to
    // (e^{-sz} + e^{-s(pi-z)}) (sin z)^{2a-2}; log of the acceptance ratio
    // against a proposal carrying z^{2a-2} e^{-sz}:
    auto accept_log = [&](double z) {
        return 2.0 * (1.0 - p.a) * std::log(2.0 * z / (kPi * std::sin(z))) +
               std::log1p(std::exp(-2.0 * p.s * (kHalfPi - z))) - std::log(2.0);
    };
    double z = 0.0;
    std::uint64_t iterations = 0;
    if (p.s >= 1.0) {
        for (;;) {
            if (++iterations > kIterationCap)
                throw std::runtime_error("alg5_small_a: iteration cap hit");
            z = state.gamma_unit_shape(q) / p.s;
            const double u = state.uniform();
            if (z == 0.0) continue;  // underflow; a null event in exact arithmetic
            if (z >= kHalfPi) continue;
            if (std::log(u) <= accept_log(z)) break;
        }
    } else {
        // power-of-uniform proposal has no exponential tilt, so e^{-sz}
        // moves into the acceptance ratio
        for (;;) {
            if (++iterations > kIterationCap)
                throw std::runtime_error("alg5_small_a: iteration cap hit");
            const double v = state.uniform();
            const double u = state.uniform();
            z = kHalfPi * std::exp(std::log(v) / q);
            if (z == 0.0) continue;
            if (std::log(u) <= -p.s * z + accept_log(z)) break;
        }
    }
    const double y = state.random_sign() * (kHalfPi - z);
    double x = std::tan(y);
    // flip to undo the symmetrization, probability e^{-sY}/(e^{-sY}+e^{sY})
    if (state.uniform() < 1.0 / (1.0 + std::exp(2.0 * p.s * y)))
        x = -x;
    return Draw{x, iterations};
}

AlgorithmId choose_algorithm(const PearsonParams& p) {
    if (p.s == 0.0) return AlgorithmId::StudentTPolar;
    if (p.a < 1.0) return AlgorithmId::Alg5SmallA;
    if (p.a == 1.0) return AlgorithmId::SkewedCauchy;
    if (std::fabs(p.s) <= alg4_beta_cap(p.a)) return AlgorithmId::Alg4Gaussian;
    return AlgorithmId::Alg2LogConcave;
}

Draw draw_pearson4(RngState& state, const PearsonParams& p, AlgorithmId algorithm) {
    if (algorithm == AlgorithmId::Auto) algorithm = choose_algorithm(p);
    switch (algorithm) {
        case AlgorithmId::StudentTPolar: {
            if (p.s != 0.0)
                throw std::domain_error("StudentTPolar: valid only for s = 0");
            const double nu = 2.0 * p.a - 1.0;
            return Draw{student_t_polar(state, nu) / std::sqrt(nu), 1};
        }
        case AlgorithmId::T2Inverse:
            if (p.a != 1.5 || p.s != 0.0)
                throw std::domain_error("T2Inverse: valid only for a = 3/2, s = 0");
            return Draw{t2_inverse(state) / std::sqrt(2.0), 1};
        case AlgorithmId::SkewedCauchy:
            if (p.a != 1.0)
                throw std::domain_error("SkewedCauchy: valid only for a = 1");
            return Draw{std::tan(skewed_cauchy_y(state, p.s)), 1};
        case AlgorithmId::Alg1StudentTRejection:
            return alg1_student_rejection(state, p);
        case AlgorithmId::Alg2LogConcave:
            return alg2_logconcave(state, p);
        case AlgorithmId::Alg3Exponential:
            return alg3_exponential(state, p);
        case AlgorithmId::Alg4Gaussian:
            return alg4_gaussian(state, p);
        case AlgorithmId::Alg5SmallA:
            return alg5_small_a(state, p);
        default:
            throw std::domain_error("draw_pearson4: unknown algorithm id");
    }
}

SampleReport sample_pearson4(RngState& state, const PearsonParams& p,
                             AlgorithmId algorithm, std::size_t n,
                             std::uint64_t seed) {
    if (algorithm == AlgorithmId::Auto) algorithm = choose_algorithm(p);
    SampleReport report{{}, {}, algorithm, p, seed};
    report.variates.reserve(n);
    report.iterations.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Draw d = draw_pearson4(state, p, algorithm);
        report.variates.push_back(d.value);
        report.iterations.push_back(d.iterations);
    }
    return report;
}

const char* algorithm_name(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::StudentTPolar: return "student-t";
        case AlgorithmId::T2Inverse: return "t2";
        case AlgorithmId::SkewedCauchy: return "skewed-cauchy";
        case AlgorithmId::Alg1StudentTRejection: return "alg1";
        case AlgorithmId::Alg2LogConcave: return "alg2";
        case AlgorithmId::Alg3Exponential: return "alg3";
        case AlgorithmId::Alg4Gaussian: return "alg4";
        case AlgorithmId::Alg5SmallA: return "alg5";
        case AlgorithmId::Auto: return "auto";
    }
    return "?";
}

std::optional<AlgorithmId> parse_algorithm(const std::string& name) {
    for (AlgorithmId id :
         {AlgorithmId::StudentTPolar, AlgorithmId::T2Inverse, AlgorithmId::SkewedCauchy,
          AlgorithmId::Alg1StudentTRejection, AlgorithmId::Alg2LogConcave,
          AlgorithmId::Alg3Exponential, AlgorithmId::Alg4Gaussian,
          AlgorithmId::Alg5SmallA, AlgorithmId::Auto})
        if (name == algorithm_name(id)) return id;
    return std::nullopt;
}

}  // namespace pearson4
