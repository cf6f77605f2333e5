#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

namespace testing {

// Fixed-seed source for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

private:
    std::mt19937_64 rng_;
};

// Adaptive Simpson quadrature, independent of the library's closed forms.
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol, int depth = 50) {
    auto rule = [&](double lo, double hi, double flo, double fmid, double fhi) {
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    };
    std::function<double(double, double, double, double, double, double, double, int)> rec =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps, int d) {
            const double mid = 0.5 * (lo + hi);
            const double lm = 0.5 * (lo + mid);
            const double rm = 0.5 * (mid + hi);
            const double flm = f(lm);
            const double frm = f(rm);
            const double left = rule(lo, mid, flo, flm, fmid);
            const double right = rule(mid, hi, fmid, frm, fhi);
            const double diff = std::abs(left + right - whole);
            // Further halving cannot beat rounding in the estimates themselves.
            const double floor = 8.0 * 2.220446049250313e-16 * (std::abs(left) + std::abs(right));
            if (d <= 0 || diff <= 15.0 * eps || diff <= floor) {
                return left + right + (left + right - whole) / 15.0;
            }
            return rec(lo, mid, flo, flm, fmid, left, 0.5 * eps, d - 1) +
                   rec(mid, hi, fmid, frm, fhi, right, 0.5 * eps, d - 1);
        };
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return rec(a, b, fa, fm, fb, rule(a, b, fa, fm, fb), tol, depth);
}

// Five-point Gauss–Legendre average of f over [a, b].
inline double cell_average(const std::function<double(double)>& f, double a, double b) {
    static constexpr double x[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                    0.9061798459386640};
    static constexpr double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                    0.2369268850561891, 0.2369268850561891};
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0.0;
    for (int k = 0; k < 5; ++k) acc += w[k] * f(c + h * x[k]);
    return 0.5 * acc;
}

}  // namespace testing
