#pragma once

#include <cmath>
#include <functional>

namespace bfan {

/// Adaptive Simpson on [a, b] with absolute tolerance `tol`; subdivision stops
/// once an interval shrinks below `floor_width` regardless of the local error.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, double floor_width = 1e-14) {
    struct Rec {
        const std::function<double(double)>& f;
        double floor_width;

        double run(double a, double fa, double b, double fb, double m, double fm, double whole,
                   double tol) const {
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            double delta = left + right - whole;
            if (std::abs(delta) <= 15.0 * tol || (b - a) <= floor_width)
                return left + right + delta / 15.0;
            return run(a, fa, m, fm, lm, flm, left, 0.5 * tol) +
                   run(m, fm, b, fb, rm, frm, right, 0.5 * tol);
        }
    };
    double m = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Rec{f, floor_width}.run(a, fa, b, fb, m, fm, whole, tol);
}

} // namespace bfan
