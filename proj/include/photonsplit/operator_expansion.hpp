#pragma once

// Brute-force output amplitudes by expanding the transformed creation-operator
// polynomial. Independent of the combinatorial formula; used as its oracle and for
// unbalanced splitters and Mach-Zehnder compositions.

#include "photonsplit/exactmath.hpp"
#include "photonsplit/fock.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <utility>

namespace photonsplit {

/// Linear map on creation operators: input mode j -> sum_i m[i][j] * output mode i.
template <typename Scalar>
struct ModeTransform {
    std::array<std::array<Scalar, 2>, 2> m;

    friend ModeTransform operator*(const ModeTransform& a, const ModeTransform& b) {
        ModeTransform out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
        return out;
    }
};

/// Polynomial in the two output creation operators, keyed by exponent pair.
template <typename Scalar>
using ModePolynomial = std::map<std::pair<int, int>, Scalar>;

namespace detail {

inline RadicalAmplitude scalar_sqrt(const BigRational& r, const RadicalAmplitude*) { return RadicalAmplitude::sqrt_of(r); }
inline std::complex<double> scalar_sqrt(const BigRational& r, const std::complex<double>*) {
    return std::sqrt(to_double(r));
}

inline bool scalar_is_zero(const RadicalAmplitude& x) { return x.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& x) { return x == std::complex<double>{}; }

template <typename Scalar>
void multiply_linear(ModePolynomial<Scalar>& poly, const Scalar& on_b1, const Scalar& on_b2) {
    ModePolynomial<Scalar> next;
    for (const auto& [exps, coeff] : poly) {
        // Within one monomial every contribution must share a radical; amp_add enforces it.
        if (!scalar_is_zero(on_b1)) next[{exps.first + 1, exps.second}] += coeff * on_b1;
        if (!scalar_is_zero(on_b2)) next[{exps.first, exps.second + 1}] += coeff * on_b2;
    }
    poly = std::move(next);
}

inline int phase_quarter_turns(double degrees, bool& exact) {
    double q = degrees / 90.0;
    exact = std::isfinite(q) && q == std::nearbyint(q);
    return exact ? static_cast<int>(std::fmod(std::nearbyint(q), 4.0)) : 0;
}

inline std::complex<double> phase_factor(double degrees) {
    bool exact = false;
    int q = phase_quarter_turns(degrees, exact);
    if (exact) {
        static constexpr std::array<std::complex<double>, 4> quarter{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
        return quarter[static_cast<std::size_t>((q + 4) % 4)];
    }
    return std::polar(1.0, degrees * std::numbers::pi / 180.0);
}

}  // namespace detail

/// Expands (m00 b1 + m10 b2)^n1 (m01 b1 + m11 b2)^n2 / sqrt(n1! n2!).
template <typename Scalar>
ModePolynomial<Scalar> expand_creation_polynomial(const FockInput& in, const ModeTransform<Scalar>& u) {
    ModePolynomial<Scalar> poly{{{0, 0}, detail::scalar_sqrt(BigRational(1), static_cast<const Scalar*>(nullptr))}};
    for (int i = 0; i < in.n1(); ++i) detail::multiply_linear(poly, u.m[0][0], u.m[1][0]);
    for (int i = 0; i < in.n2(); ++i) detail::multiply_linear(poly, u.m[0][1], u.m[1][1]);
    Scalar norm = detail::scalar_sqrt(BigRational(1) / BigRational(factorial(in.n1()) * factorial(in.n2())),
                                      static_cast<const Scalar*>(nullptr));
    for (auto& [exps, coeff] : poly) coeff = coeff * norm;
    return poly;
}

/// Output amplitudes <N1, N2| U |n1, n2> for every outcome with N1 + N2 = n1 + n2.
/// Monomials absent from the expansion have amplitude zero.
template <typename Scalar>
std::map<Outcome, Scalar> evolve_with(const FockInput& in, const ModeTransform<Scalar>& u) {
    auto poly = expand_creation_polynomial(in, u);
    std::map<Outcome, Scalar> out;
    for (int N1 = 0; N1 <= in.total(); ++N1) {
        int N2 = in.total() - N1;
        auto it = poly.find({N1, N2});
        Scalar coeff = (it == poly.end()) ? Scalar{} : it->second;
        Scalar bose = detail::scalar_sqrt(BigRational(factorial(N1) * factorial(N2)), static_cast<const Scalar*>(nullptr));
        out.emplace(Outcome{N1, N2}, coeff * bose);
    }
    return out;
}

inline RadicalAmplitude reflection_factor(ReflectionPhase phase) {
    return RadicalAmplitude::i_pow(phase == ReflectionPhase::plus90 ? 1 : -1);
}

inline ModeTransform<RadicalAmplitude> splitter_transform(const SplitterSpec& s,
                                                          ReflectionPhase phase = ReflectionPhase::plus90) {
    RadicalAmplitude t = RadicalAmplitude::sqrt_of(s.t2());
    RadicalAmplitude ir = reflection_factor(phase) * RadicalAmplitude::sqrt_of(s.r2());
    return {{{{t, ir}, {ir, t}}}};
}

/// Floating-point splitter; the only route for irrational transmittances.
inline ModeTransform<std::complex<double>> splitter_transform_approx(double t2,
                                                                     ReflectionPhase phase = ReflectionPhase::plus90) {
    std::complex<double> t = std::sqrt(t2);
    std::complex<double> ir = std::complex<double>(0, phase == ReflectionPhase::plus90 ? 1 : -1) * std::sqrt(1 - t2);
    return {{{{t, ir}, {ir, t}}}};
}

inline std::map<Outcome, RadicalAmplitude> evolve_fock(const FockInput& in, const SplitterSpec& s) {
    return evolve_with(in, splitter_transform(s));
}

inline std::map<Outcome, std::complex<double>> evolve_fock_approx(const FockInput& in, double t2) {
    if (!(t2 > 0 && t2 < 1)) throw std::invalid_argument("transmittance must lie strictly in (0, 1)");
    return evolve_with(in, splitter_transform_approx(t2));
}

inline OutcomeDistribution oracle_distribution(const FockInput& in, const SplitterSpec& s) {
    OutcomeDistribution dist{in, s, {}};
    for (const auto& [outcome, amp] : evolve_fock(in, s)) dist.entries.emplace(outcome, amp.norm());
    return dist;
}

/// (E[N1], E[N2]) under the oracle distribution.
inline std::pair<BigRational, BigRational> mean_output(const FockInput& in, const SplitterSpec& s) {
    auto dist = oracle_distribution(in, s);
    BigRational m1 = dist.mean_n1();
    return {m1, BigRational(in.total()) - m1};
}

struct ArmPhases {
    double arm1_deg = 0;  // path leaving the first splitter in mode 1
    double arm2_deg = 0;
};

struct MachZehnderResult {
    std::map<Outcome, std::complex<double>> amplitudes;
    /// Filled when both arm phases are multiples of 90 degrees and every amplitude
    /// reduces to a single radical.
    std::optional<std::map<Outcome, RadicalAmplitude>> exact;

    std::map<Outcome, double> probabilities() const {
        std::map<Outcome, double> out;
        for (const auto& [o, a] : amplitudes) out.emplace(o, std::norm(a));
        return out;
    }

    std::optional<std::map<Outcome, BigRational>> exact_probabilities() const {
        if (!exact) return std::nullopt;
        std::map<Outcome, BigRational> out;
        for (const auto& [o, a] : *exact) out.emplace(o, a.norm());
        return out;
    }
};

/// First splitter, per-arm phases, mirror swap, second splitter. The mirrors carry no phase.
inline MachZehnderResult mz_evolve(const FockInput& in, const SplitterSpec& first, const SplitterSpec& second,
                                   ArmPhases phases, ReflectionPhase convention = ReflectionPhase::plus90) {
    if (!std::isfinite(phases.arm1_deg) || !std::isfinite(phases.arm2_deg))
        throw std::invalid_argument("arm phases must be finite");

    using Complex = std::complex<double>;
    ModeTransform<Complex> swap_c{{{{Complex{0}, Complex{1}}, {Complex{1}, Complex{0}}}}};
    ModeTransform<Complex> arms_c{{{{detail::phase_factor(phases.arm1_deg), Complex{0}},
                                    {Complex{0}, detail::phase_factor(phases.arm2_deg)}}}};
    auto u_c = splitter_transform_approx(to_double(second.t2()), convention) * swap_c * arms_c *
               splitter_transform_approx(to_double(first.t2()), convention);

    MachZehnderResult result;
    result.amplitudes = evolve_with(in, u_c);

    bool exact1 = false;
    bool exact2 = false;
    int q1 = detail::phase_quarter_turns(phases.arm1_deg, exact1);
    int q2 = detail::phase_quarter_turns(phases.arm2_deg, exact2);
    if (exact1 && exact2) {
        using Amp = RadicalAmplitude;
        ModeTransform<Amp> swap{{{{Amp{}, Amp::i_pow(0)}, {Amp::i_pow(0), Amp{}}}}};
        ModeTransform<Amp> arms{{{{Amp::i_pow(q1), Amp{}}, {Amp{}, Amp::i_pow(q2)}}}};
        try {
            auto u = splitter_transform(second, convention) * swap * arms * splitter_transform(first, convention);
            result.exact = evolve_with(in, u);
        } catch (const IncompatibleRadicals&) {
            result.exact.reset();
        }
    }
    return result;
}

}  // namespace photonsplit
