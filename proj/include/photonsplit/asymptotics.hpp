#pragma once

// Large-n approximations: Stirling, the binomial peak approximant, the arcsine limit
// for equal input beams, and exact moments of a distribution for comparison.

#include "photonsplit/exactmath.hpp"
#include "photonsplit/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace photonsplit {

/// e^-n n^n sqrt(2 pi n), evaluated in log space so it stays finite up to n = 170.
inline double stirling(int n) {
    if (n < 1) throw std::domain_error("stirling requires n >= 1");
    const double x = n;
    return std::exp(x * std::log(x) - x) * std::sqrt(2 * std::numbers::pi * x);
}

/// 2^(n+1) / (sqrt(2 pi n) (1 + n eps^2 / 2)), the small-eps approximant of C(n, (1+eps) n/2).
inline double binom_peak_approx(int n, double epsilon) {
    if (n < 2) throw std::domain_error("binom_peak_approx requires n >= 2");
    if (!(std::abs(epsilon) < 1)) throw std::domain_error("binom_peak_approx requires |epsilon| < 1");
    const double x = n;
    return std::ldexp(1.0, n + 1) / (std::sqrt(2 * std::numbers::pi * x) * (1 + x * epsilon * epsilon / 2));
}

/// 1 / (n pi sqrt(x (1 - x))) with x = m/n; undefined at the endpoints m = 0 and m = n.
inline double arcsine_approx(int n, int m) {
    if (n < 1) throw std::domain_error("arcsine_approx requires n >= 1");
    if (m <= 0 || m >= n) throw std::domain_error("arcsine_approx is singular at m = 0 and m = n");
    const double x = static_cast<double>(m) / n;
    return 1.0 / (n * std::numbers::pi * std::sqrt(x * (1 - x)));
}

struct DistStats {
    double mean;
    double variance;
    double half_width_epsilon;
};

struct ExactMoments {
    BigRational mean;
    BigRational variance;
};

inline ExactMoments exact_moments(const OutcomeDistribution& dist) {
    if (dist.entries.empty()) throw std::invalid_argument("empty distribution");
    BigRational mean = dist.mean_n1();
    BigRational var = 0;
    for (const auto& [o, p] : dist.entries) {
        BigRational d = BigRational(o.n1) - mean;
        var += d * d * p;
    }
    return {mean, var};
}

/// Moments of N1, and the smallest eps = 2k/n - 1 (k >= n/2) at which P(k) has fallen to
/// half the peak probability. Distributions that never fall that far report 1.
inline DistStats dist_stats(const OutcomeDistribution& dist) {
    auto moments = exact_moments(dist);
    const int n = dist.input.total();
    double eps = 0;
    if (n > 0) {
        BigRational peak = 0;
        for (const auto& [o, p] : dist.entries) peak = std::max(peak, p);
        eps = 1;
        for (int k = (n + 1) / 2; k <= n; ++k) {
            if (dist.at(k) * 2 <= peak) {
                eps = static_cast<double>(2 * k - n) / n;
                break;
            }
        }
    }
    return {to_double(moments.mean), to_double(moments.variance), eps};
}

}  // namespace photonsplit
