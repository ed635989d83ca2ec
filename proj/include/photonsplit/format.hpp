#pragma once

// Text forms of exact rationals: "p/q" strings, parsing, and correctly rounded decimals.

#include "photonsplit/exactmath.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace photonsplit {

/// "p/q" in lowest terms, or "p" for integers.
inline std::string rational_to_string(const BigRational& r) { return r.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// BigInt's string constructor reads a leading 0 as octal.
inline BigInt decimal_int(std::string_view digits) {
    auto first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

inline BigInt pow10(int k) {
    BigInt out = 1;
    for (int i = 0; i < k; ++i) out *= 10;
    return out;
}

}  // namespace detail

/// Accepts "p/q", integers, and plain decimals such as "0.25", each with an optional sign.
inline BigRational parse_rational(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    BigRational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
        BigInt d = detail::decimal_int(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = BigRational(detail::decimal_int(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !detail::all_digits(whole)) ||
            (!frac.empty() && !detail::all_digits(frac)))
            throw fail();
        std::string digits = std::string(whole) + std::string(frac);
        value = BigRational(detail::decimal_int(digits), detail::pow10(static_cast<int>(frac.size())));
    } else {
        if (!detail::all_digits(s)) throw fail();
        value = BigRational(detail::decimal_int(s));
    }
    return negative ? BigRational(-value) : value;
}

/// Decimal rendering with `digits` significant digits, rounded half-to-even from the exact
/// value, in the style of printf's %g (trailing zeros trimmed).
inline std::string to_decimal_string(const BigRational& r, int digits = 15) {
    if (digits < 1) throw std::invalid_argument("digits must be positive");
    if (r == 0) return "0";
    const bool negative = r < 0;
    const BigInt p = boost::multiprecision::abs(numerator_of(r));
    const BigInt q = denominator_of(r);

    // exponent e with 10^e <= |r| < 10^(e+1); start from a bit-length estimate.
    auto bits = [](const BigInt& x) { return static_cast<long>(boost::multiprecision::msb(x)); };
    int e = static_cast<int>(std::floor((bits(p) - bits(q)) * std::log10(2.0)));
    auto scaled_num = [&](int shift) { return shift >= 0 ? p * detail::pow10(shift) : p; };
    auto scaled_den = [&](int shift) { return shift >= 0 ? q : q * detail::pow10(-shift); };
    // |r| >= 10^e  <=>  p * 10^-e >= q
    auto at_least_pow10 = [&](int k) { return scaled_num(-k) >= scaled_den(-k); };
    while (!at_least_pow10(e)) --e;
    while (at_least_pow10(e + 1)) ++e;

    const int shift = digits - 1 - e;
    BigInt num = scaled_num(shift);
    BigInt den = scaled_den(shift);
    BigInt quotient = num / den;
    BigInt remainder = num % den;
    BigInt twice = remainder * 2;
    if (twice > den || (twice == den && (quotient & 1) != 0)) ++quotient;
    if (quotient == detail::pow10(digits)) {
        quotient /= 10;
        ++e;
    }

    std::string mantissa = quotient.str();
    std::string out = negative ? "-" : "";
    auto trim = [](std::string s) {
        if (s.find('.') != std::string::npos) {
            while (!s.empty() && s.back() == '0') s.pop_back();
            if (!s.empty() && s.back() == '.') s.pop_back();
        }
        return s;
    };
    if (e >= -4 && e < digits) {
        std::string body;
        if (e >= 0) {
            body = mantissa.substr(0, static_cast<std::size_t>(e + 1)) + "." +
                   mantissa.substr(static_cast<std::size_t>(e + 1));
        } else {
            body = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mantissa;
        }
        out += trim(body);
    } else {
        std::string body = trim(mantissa.substr(0, 1) + "." + mantissa.substr(1));
        std::string exp = std::to_string(std::abs(e));
        if (exp.size() < 2) exp = "0" + exp;
        out += body + "e" + (e < 0 ? "-" : "+") + exp;
    }
    return out;
}

}  // namespace photonsplit
