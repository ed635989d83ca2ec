#pragma once

// Domain types shared by the amplitude formula and the operator-expansion oracle.

#include "photonsplit/exactmath.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace photonsplit {

/// Photon counts on the two input ports.
class FockInput {
public:
    FockInput(int n1, int n2) : n1_(n1), n2_(n2) {
        if (n1 < 0 || n2 < 0) throw std::invalid_argument("photon counts must be non-negative");
    }

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int total() const { return n1_ + n2_; }

    FockInput mirrored() const { return {n2_, n1_}; }

    friend auto operator<=>(const FockInput&, const FockInput&) = default;

private:
    int n1_;
    int n2_;
};

/// Output occupation (N1, N2).
struct Outcome {
    int n1;
    int n2;

    friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

enum class ReflectionPhase { plus90, minus90 };

/// Lossless two-port splitter with rational transmittance t^2 and reflectance r^2 = 1 - t^2.
///
/// A photon entering port 1 leaves port 1 with amplitude t (transmitted) and port 2 with
/// amplitude i r (reflected); port 2 maps symmetrically.
class SplitterSpec {
public:
    explicit SplitterSpec(BigRational t2) : t2_(std::move(t2)) {
        if (t2_ <= 0 || t2_ >= 1) throw std::invalid_argument("transmittance must lie strictly in (0, 1)");
    }

    static SplitterSpec balanced() { return SplitterSpec(BigRational(1, 2)); }

    const BigRational& t2() const { return t2_; }
    BigRational r2() const { return 1 - t2_; }

    bool is_balanced() const { return t2_ == BigRational(1, 2); }

    friend bool operator==(const SplitterSpec&, const SplitterSpec&) = default;

private:
    BigRational t2_;
};

/// Exact probabilities P(N1, N2 | n1, n2), keyed by outcome in ascending N1.
struct OutcomeDistribution {
    FockInput input;
    SplitterSpec splitter;
    std::map<Outcome, BigRational> entries;

    const BigRational& at(int N1) const { return entries.at(Outcome{N1, input.total() - N1}); }

    BigRational total() const {
        BigRational sum = 0;
        for (const auto& [outcome, p] : entries) sum += p;
        return sum;
    }

    BigRational mean_n1() const {
        BigRational m = 0;
        for (const auto& [outcome, p] : entries) m += p * outcome.n1;
        return m;
    }
};

inline std::string to_string(const FockInput& in) {
    return "|" + std::to_string(in.n1()) + "," + std::to_string(in.n2()) + ">";
}

}  // namespace photonsplit
