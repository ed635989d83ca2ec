#pragma once

// Classical field picture of the splitter and the Mach-Zehnder energy-conservation
// argument that fixes the reflection phase. Double precision throughout; phases are
// degrees at the interface.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace photonsplit::classical {

/// Field amplitude in units of sqrt(photon energy); |amplitude|^2 is a photon number.
struct ClassicalField {
    std::complex<double> amplitude;

    double photon_number() const { return std::norm(amplitude); }

    static ClassicalField from_photons(double n) { return {std::sqrt(n)}; }
};

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

/// Balanced splitter: A1 = (a1 + i a2)/sqrt2, A2 = (i a1 + a2)/sqrt2.
inline std::pair<ClassicalField, ClassicalField> classical_split(const ClassicalField& a1, const ClassicalField& a2) {
    constexpr std::complex<double> i{0, 1};
    const double s = std::numbers::sqrt2 / 2;
    return {{s * (a1.amplitude + i * a2.amplitude)}, {s * (i * a1.amplitude + a2.amplitude)}};
}

/// In-phase inputs split evenly: ((n1+n2)/2, (n1+n2)/2).
inline std::pair<double, double> classical_photon_numbers(double n1, double n2) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("photon counts must be non-negative");
    double half = (n1 + n2) / 2;
    return {half, half};
}

struct MZConfig {
    double r2;  // reflectance; transmittance is 1 - r2
    double phi_r_deg = 90;
    double phi_t_deg = 0;

    double t2() const { return 1 - r2; }
    double phase_diff_deg() const { return phi_t_deg - phi_r_deg; }

    void validate() const {
        if (!(r2 >= 0 && r2 <= 1)) throw std::invalid_argument("reflectance must lie in [0, 1]");
        if (!std::isfinite(phi_r_deg) || !std::isfinite(phi_t_deg))
            throw std::invalid_argument("phases must be finite");
    }
};

struct MZIntensities {
    double i1;
    double i2;
    double residual;  // i1 + i2 - 1
    bool conserves;   // |residual| <= 1e-12
};

inline constexpr double kConservationTolerance = 1e-12;

/// Two identical splitters: I1 = 4 r^2 t^2, I2 = r^4 + t^4 + 2 r^2 t^2 cos 2(phi_t - phi_r).
inline MZIntensities mz_intensities(const MZConfig& cfg) {
    cfg.validate();
    const double r2 = cfg.r2;
    const double t2 = cfg.t2();
    double i1 = 4 * r2 * t2;
    double i2 = r2 * r2 + t2 * t2 + 2 * r2 * t2 * std::cos(2 * deg_to_rad(cfg.phase_diff_deg()));
    double residual = i1 + i2 - 1;
    return {i1, i2, residual, std::abs(residual) <= kConservationTolerance};
}

/// d(I1 + I2)/d(delta), delta = phi_t - phi_r in degrees.
inline double mz_conservation_slope(double r2, double delta_deg) {
    return -4 * r2 * (1 - r2) * std::sin(2 * deg_to_rad(delta_deg)) * std::numbers::pi / 180.0;
}

/// Raised when r2 is 0 or 1: the phase term has zero weight and every phase conserves.
struct DegenerateSplitter : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr double kScanTolerance = 1e-9;

/// Phase differences in [0, 360) at which the interferometer conserves energy.
///
/// f(delta) = I1 + I2 - 1 is non-negative and only touches zero, so grid minima are
/// refined by bisection on the slope rather than on f.
inline std::vector<double> lossless_phase_scan(double r2, double grid_step_deg) {
    if (!(r2 >= 0 && r2 <= 1)) throw std::invalid_argument("reflectance must lie in [0, 1]");
    if (r2 == 0 || r2 == 1) throw DegenerateSplitter("r2 * t2 = 0: every phase difference conserves energy");
    if (!(grid_step_deg > 0 && grid_step_deg <= 360)) throw std::invalid_argument("grid step must lie in (0, 360]");
    double cells = 360.0 / grid_step_deg;
    if (std::abs(cells - std::nearbyint(cells)) > 1e-9) throw std::invalid_argument("grid step must divide 360");
    const int n = static_cast<int>(std::nearbyint(cells));

    auto f = [&](double delta) { return mz_intensities({r2, 0, delta}).residual; };
    auto grid = [&](int j) { return grid_step_deg * (((j % n) + n) % n); };

    std::vector<double> hits;
    for (int j = 0; j < n; ++j) {
        double here = f(grid(j));
        if (here > f(grid(j - 1)) || here > f(grid(j + 1))) continue;

        double lo = grid(j) - grid_step_deg;
        double hi = grid(j) + grid_step_deg;
        if (mz_conservation_slope(r2, lo) > 0 || mz_conservation_slope(r2, hi) < 0) continue;
        for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
            double mid = 0.5 * (lo + hi);
            (mz_conservation_slope(r2, mid) < 0 ? lo : hi) = mid;
        }
        double delta = 0.5 * (lo + hi);
        if (std::abs(f(delta)) > kScanTolerance) continue;

        delta = std::fmod(delta, 360.0);
        if (delta < 0) delta += 360.0;
        bool duplicate = false;
        for (double h : hits) {
            double gap = std::abs(h - delta);
            if (std::min(gap, 360.0 - gap) < grid_step_deg) duplicate = true;
        }
        if (!duplicate) hits.push_back(delta);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace photonsplit::classical
