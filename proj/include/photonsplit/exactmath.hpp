#pragma once

// Exact integer/rational arithmetic, combinatorics, and amplitudes of the form
// (a + b i) * sqrt(s) with rational a, b and a square-free rational s.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace photonsplit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct IncompatibleRadicals : std::domain_error {
    using std::domain_error::domain_error;
};

inline BigInt numerator_of(const BigRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const BigRational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

/// C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.
inline BigInt binomial(int n, int k) {
    if (n < 0) throw std::domain_error("binomial with negative n");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    // Each partial product out * (n-k+i) / i is itself a binomial, so the division is exact.
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

/// 2^-n as an exact rational.
inline BigRational half_pow(int n) {
    if (n < 0) throw std::domain_error("half_pow with negative exponent");
    return BigRational(BigInt(1), BigInt(1) << n);
}

namespace detail {

struct SquareSplit {
    BigInt root;  // n = root^2 * free
    BigInt free;
};

inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

// Divides every power of p out of rem, moving p^(count/2) into root and p^(count%2) into free.
inline void strip_prime(BigInt& rem, std::uint64_t p, BigInt& root, BigInt& free) {
    int count = 0;
    while (rem % p == 0) {
        rem /= p;
        ++count;
    }
    for (int i = 0; i < count / 2; ++i) root *= p;
    if (count % 2) free *= p;
}

inline SquareSplit split_square_factor(BigInt n) {
    if (n <= 0) throw std::domain_error("square-free split of a non-positive integer");
    BigInt root = 1;
    BigInt free = 1;
    std::uint64_t p = 2;
    while (n > 1 && BigInt(p) * p <= n) {
        if (p > kTrialDivisionBound) break;
        if (n % p == 0) strip_prime(n, p, root, free);
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) {
        if (BigInt(p) * p > n) {
            free *= n;  // n is prime
        } else {
            // All prime factors of n exceed the trial bound.
            BigInt s = boost::multiprecision::sqrt(n);
            if (s * s == n) {
                root *= s;
            } else {
                // Below bound^3 a non-square cofactor is p or p*q with distinct primes.
                BigInt bound3 = BigInt(kTrialDivisionBound);
                bound3 = bound3 * bound3 * bound3;
                if (n >= bound3)
                    throw std::domain_error("radicand too large to certify as square-free");
                free *= n;
            }
        }
    }
    return {root, free};
}

// For square-free a and b: sqrt(a) * sqrt(b) = g * sqrt(a*b/g^2) with g = gcd(a, b).
inline SquareSplit square_free_product(const BigInt& a, const BigInt& b) {
    BigInt g = boost::multiprecision::gcd(a, b);
    return {g, (a / g) * (b / g)};
}

}  // namespace detail

struct CanonicalRadical {
    BigRational multiplier;
    BigRational radicand;
};

/// Writes sqrt(s) as multiplier * sqrt(radicand) with a square-free numerator and
/// denominator in the radicand.
inline CanonicalRadical radical_canonicalize(const BigRational& s) {
    if (s <= 0) throw std::domain_error("radical_canonicalize requires a positive argument");
    auto num = detail::split_square_factor(numerator_of(s));
    auto den = detail::split_square_factor(denominator_of(s));
    return {BigRational(num.root, den.root), BigRational(num.free, den.free)};
}

inline bool is_canonical_radicand(const BigRational& s) {
    return s > 0 && radical_canonicalize(s).multiplier == 1;
}

/// Exact complex amplitude (re + im i) * sqrt(radicand).
///
/// The radicand is kept canonical, and the zero amplitude always carries radicand 1,
/// so two amplitudes compare equal iff they denote the same complex number.
class RadicalAmplitude {
public:
    RadicalAmplitude() = default;

    RadicalAmplitude(BigRational re, BigRational im, const BigRational& radicand = 1)
        : re_(std::move(re)), im_(std::move(im)) {
        if (radicand <= 0) throw std::domain_error("radicand must be positive");
        auto c = radical_canonicalize(radicand);
        re_ *= c.multiplier;
        im_ *= c.multiplier;
        radicand_ = c.radicand;
        normalize_zero();
    }

    static RadicalAmplitude rational(BigRational re) { return {std::move(re), 0}; }

    /// sqrt(s) for s >= 0.
    static RadicalAmplitude sqrt_of(const BigRational& s) {
        if (s < 0) throw std::domain_error("sqrt of a negative rational");
        if (s == 0) return {};
        return {1, 0, s};
    }

    /// i^k for any integer k.
    static RadicalAmplitude i_pow(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }
    const BigRational& radicand() const { return radicand_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    /// |x|^2, always exact.
    BigRational norm() const { return (re_ * re_ + im_ * im_) * radicand_; }

    RadicalAmplitude conj() const { return from_canonical(re_, -im_, radicand_); }

    std::complex<double> to_complex() const {
        double root = std::sqrt(to_double(radicand_));
        return {to_double(re_) * root, to_double(im_) * root};
    }

    RadicalAmplitude operator-() const { return from_canonical(-re_, -im_, radicand_); }

    RadicalAmplitude& operator*=(const BigRational& k) {
        re_ *= k;
        im_ *= k;
        normalize_zero();
        return *this;
    }

    friend bool operator==(const RadicalAmplitude&, const RadicalAmplitude&) = default;

    friend RadicalAmplitude amp_add(const RadicalAmplitude& x, const RadicalAmplitude& y);
    friend RadicalAmplitude amp_mul(const RadicalAmplitude& x, const RadicalAmplitude& y);

private:
    static RadicalAmplitude from_canonical(BigRational re, BigRational im, BigRational radicand) {
        RadicalAmplitude out;
        out.re_ = std::move(re);
        out.im_ = std::move(im);
        out.radicand_ = std::move(radicand);
        out.normalize_zero();
        return out;
    }

    void normalize_zero() {
        if (is_zero()) radicand_ = 1;
    }

    BigRational re_ = 0;
    BigRational im_ = 0;
    BigRational radicand_ = 1;
};

inline RadicalAmplitude amp_add(const RadicalAmplitude& x, const RadicalAmplitude& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.radicand_ != y.radicand_) {
        throw IncompatibleRadicals("cannot add amplitudes over sqrt(" + x.radicand_.str() +
                                   ") and sqrt(" + y.radicand_.str() + ")");
    }
    return RadicalAmplitude::from_canonical(x.re_ + y.re_, x.im_ + y.im_, x.radicand_);
}

inline RadicalAmplitude amp_mul(const RadicalAmplitude& x, const RadicalAmplitude& y) {
    if (x.is_zero() || y.is_zero()) return {};
    auto num = detail::square_free_product(numerator_of(x.radicand_), numerator_of(y.radicand_));
    auto den = detail::square_free_product(denominator_of(x.radicand_), denominator_of(y.radicand_));
    // Square-free numerator and denominator stay square-free after cancelling common factors.
    BigRational multiplier(num.root, den.root);
    BigRational radicand(num.free, den.free);
    BigRational re = (x.re_ * y.re_ - x.im_ * y.im_) * multiplier;
    BigRational im = (x.re_ * y.im_ + x.im_ * y.re_) * multiplier;
    return RadicalAmplitude::from_canonical(std::move(re), std::move(im), std::move(radicand));
}

inline RadicalAmplitude operator+(const RadicalAmplitude& x, const RadicalAmplitude& y) { return amp_add(x, y); }
inline RadicalAmplitude operator-(const RadicalAmplitude& x, const RadicalAmplitude& y) { return amp_add(x, -y); }
inline RadicalAmplitude operator*(const RadicalAmplitude& x, const RadicalAmplitude& y) { return amp_mul(x, y); }
inline RadicalAmplitude& operator+=(RadicalAmplitude& x, const RadicalAmplitude& y) { return x = amp_add(x, y); }

inline RadicalAmplitude operator*(RadicalAmplitude x, const BigRational& k) { return x *= k; }
inline RadicalAmplitude operator*(const BigRational& k, RadicalAmplitude x) { return x *= k; }

inline std::ostream& operator<<(std::ostream& os, const RadicalAmplitude& a) {
    os << "(" << a.re() << (a.im() < 0 ? "" : "+") << a.im() << "i)";
    if (a.radicand() != 1) os << "*sqrt(" << a.radicand() << ")";
    return os;
}

}  // namespace photonsplit
