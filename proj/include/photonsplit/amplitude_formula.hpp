#pragma once

// Closed-form combinatorial amplitudes and probabilities for a balanced (50:50)
// splitter: single-beam binomial statistics, the two-beam sum over sub-amplitudes,
// and the collapsed form for equal input beams.

#include "photonsplit/exactmath.hpp"
#include "photonsplit/fock.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace photonsplit {

namespace detail {

inline void require_index(int value, int lo, int hi, const char* what) {
    if (value < lo || value > hi) {
        throw std::domain_error(std::string(what) + " = " + std::to_string(value) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

inline int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

// sqrt(2^-n), which leaves a sqrt(1/2) in the radicand for odd n.
inline RadicalAmplitude root_half_pow(int n) {
    return RadicalAmplitude::rational(half_pow(n / 2)) * RadicalAmplitude::sqrt_of(half_pow(n % 2));
}

}  // namespace detail

/// P(N1, n1 - N1 | n1, 0) = C(n1, N1) / 2^n1.
inline BigRational single_beam_prob(int n1, int N1) {
    if (n1 < 0) throw std::domain_error("negative photon count");
    detail::require_index(N1, 0, n1, "N1");
    return BigRational(binomial(n1, N1)) * half_pow(n1);
}

/// Which port the single beam enters and which output port holds the k counted photons.
/// The phase is i per reflected photon, with transmission carrying no phase.
enum class SingleBeamOrientation {
    port1_k_in_out1,  // k transmitted, n - k reflected: phase i^(n-k)
    port1_k_in_out2,  // k reflected: phase i^k
    port2_k_in_out1,  // k reflected: phase i^k
    port2_k_in_out2,  // k transmitted, n - k reflected: phase i^(n-k)
};

inline RadicalAmplitude single_beam_amplitude(int n, int k,
                                              SingleBeamOrientation orientation = SingleBeamOrientation::port1_k_in_out1) {
    if (n < 0) throw std::domain_error("negative photon count");
    detail::require_index(k, 0, n, "k");
    int reflected = (orientation == SingleBeamOrientation::port1_k_in_out1 ||
                     orientation == SingleBeamOrientation::port2_k_in_out2)
                        ? n - k
                        : k;
    return RadicalAmplitude::i_pow(reflected) * RadicalAmplitude::sqrt_of(BigRational(binomial(n, k))) *
           detail::root_half_pow(n);
}

/// Sub-amplitude for k photons transmitted from beam 1 and N1 - k reflected from beam 2
/// into output 1:  (-1)^(n1-k) sqrt(C(n1,k) C(n2,N1-k)) 2^-(n1+n2)/2.
/// Any out-of-range binomial index gives an exact zero.
inline RadicalAmplitude pair_subamplitude(const FockInput& in, int N1, int k) {
    BigInt weight = binomial(in.n1(), k) * binomial(in.n2(), N1 - k);
    if (weight == 0) return {};
    return RadicalAmplitude::rational(detail::sign_pow(in.n1() - k)) *
           RadicalAmplitude::sqrt_of(BigRational(weight)) * detail::root_half_pow(in.total());
}

/// Amplitude for N1 photons in output 1, summing the sub-amplitudes with Bose weights
/// sqrt(C(N1,k) C(N2,n1-k)):
///
///   (-1)^n1 2^-(n1+n2)/2 sum_k (-1)^k sqrt(C(n1,k) C(n2,N1-k) C(N1,k) C(N2,n1-k)).
///
/// Every non-zero term carries the same radical sqrt(N1! N2! / (n1! n2!)), so the sum is
/// accumulated exactly; a mismatch would raise IncompatibleRadicals.
inline RadicalAmplitude output_amplitude(const FockInput& in, int N1) {
    detail::require_index(N1, 0, in.total(), "N1");
    const int n1 = in.n1();
    const int n2 = in.n2();
    const int N2 = in.total() - N1;
    RadicalAmplitude sum;
    // Outside this window one of the four binomials vanishes.
    const int k_lo = std::max({0, N1 - n2, n1 - N2});
    const int k_hi = std::min(N1, n1);
    for (int k = k_lo; k <= k_hi; ++k) {
        BigInt product = binomial(n1, k) * binomial(n2, N1 - k) * binomial(N1, k) * binomial(N2, n1 - k);
        if (product == 0) continue;
        sum += RadicalAmplitude::rational(detail::sign_pow(k)) * RadicalAmplitude::sqrt_of(BigRational(product));
    }
    return RadicalAmplitude::rational(detail::sign_pow(n1)) * sum * detail::root_half_pow(in.total());
}

/// |output_amplitude|^2 for every outcome N1 = 0 .. n1 + n2.
inline OutcomeDistribution output_distribution(const FockInput& in) {
    OutcomeDistribution dist{in, SplitterSpec::balanced(), {}};
    for (int N1 = 0; N1 <= in.total(); ++N1) {
        dist.entries.emplace(Outcome{N1, in.total() - N1}, output_amplitude(in, N1).norm());
    }
    return dist;
}

/// Collapsed amplitude for equal beams n1 = n2 = n at outcome (2m, 2n - 2m):
/// (-1)^(n-m) 2^-n sqrt(C(2m,m) C(2n-2m,n-m)).
inline RadicalAmplitude symmetric_amplitude(int n, int m) {
    if (n < 0) throw std::domain_error("negative photon count");
    detail::require_index(m, 0, n, "m");
    BigInt weight = binomial(2 * m, m) * binomial(2 * n - 2 * m, n - m);
    return RadicalAmplitude::rational(BigRational(detail::sign_pow(n - m)) * half_pow(n)) *
           RadicalAmplitude::sqrt_of(BigRational(weight));
}

inline BigRational symmetric_prob(int n, int m) {
    if (n < 0) throw std::domain_error("negative photon count");
    detail::require_index(m, 0, n, "m");
    return BigRational(binomial(2 * m, m) * binomial(2 * n - 2 * m, n - m)) * half_pow(2 * n);
}

/// P(0, 2n | n, n) = P(2n, 0 | n, n) = C(2n, n) / 4^n.
inline BigRational bunching_prob(int n) {
    if (n < 0) throw std::domain_error("negative photon count");
    return BigRational(binomial(2 * n, n)) * half_pow(2 * n);
}

}  // namespace photonsplit
