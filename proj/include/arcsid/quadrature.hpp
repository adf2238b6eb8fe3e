#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "arcsid/combinatorics.hpp"

namespace arcsid {

// Midpoint-rule estimate of the integral representation
//
//   binom(2n, n) = (1/pi) * Integral_{0}^{inf} (1/4 + s^2)^{-(n+1)} ds
//
// truncated to [0, cutoff]. Kahan compensation keeps the float summation
// error well below the truncation tail. The integrand is analytic in a strip
// of half-width 1/2 around the real axis (poles at s = +-i/2), so the
// midpoint rule converges super-algebraically in the step size; the
// truncation tail is the dominant error and is bounded by
// central_binomial_integral_tail_bound.
inline double central_binomial_integral_estimate(int n, long long steps, double cutoff) {
    if (n < 0) throw std::invalid_argument("negative index " + std::to_string(n));
    if (steps < 16) {
        throw std::invalid_argument("too few quadrature steps: " + std::to_string(steps));
    }
    if (!(cutoff > 0.0)) {
        throw std::invalid_argument("cutoff must be positive");
    }
    const double h = cutoff / static_cast<double>(steps);
    double sum = 0.0;
    double comp = 0.0;  // Kahan carry
    for (long long i = 0; i < steps; ++i) {
        const double s = (static_cast<double>(i) + 0.5) * h;
        const double base = 0.25 + s * s;
        // (1/4 + s^2)^{-(n+1)} by repeated multiplication: n is small and this
        // avoids pow() edge cases near the underflow threshold.
        double p = base;
        for (int j = 0; j < n; ++j) p *= base;
        const double term = 1.0 / p;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum * h / 3.14159265358979323846;
}

// Upper bound on the neglected tail (1/pi prefactor included): for
// s >= cutoff > 0, (1/4 + s^2)^{-(n+1)} <= s^{-2(n+1)}, so
//   (1/pi) * Integral_{cutoff}^{inf} s^{-2(n+1)} ds
//     = cutoff^{-(2n+1)} / (pi * (2n+1)).
inline double central_binomial_integral_tail_bound(int n, double cutoff) {
    if (n < 0) throw std::invalid_argument("negative index " + std::to_string(n));
    if (!(cutoff > 0.0)) {
        throw std::invalid_argument("cutoff must be positive");
    }
    return std::pow(cutoff, -(2.0 * n + 1.0)) /
           (3.14159265358979323846 * (2.0 * n + 1.0));
}

}  // namespace arcsid
