#pragma once

#include <cmath>
#include <stdexcept>

namespace pearson4 {

/// Adaptive Simpson integration with absolute tolerance.
/// Throws if the recursion exceeds max_depth without converging.
template <typename F>
double adaptive_simpson(F&& f, double lo, double hi, double abs_tol = 1e-12,
                        int max_depth = 60) {
    struct Impl {
        F& f;
        int max_depth;
        double run(double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;
            if (std::fabs(delta) <= 15.0 * tol)
                return left + right + delta / 15.0;
            if (depth >= max_depth)
                throw std::runtime_error("adaptive_simpson: no convergence at max depth");
            return run(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
                   run(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
        }
    };
    if (!(lo < hi)) return 0.0;
    const double m = 0.5 * (lo + hi);
    const double fa = f(lo), fm = f(m), fb = f(hi);
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    Impl impl{f, max_depth};
    return impl.run(lo, hi, fa, fm, fb, whole, abs_tol, 0);
}

}  // namespace pearson4
