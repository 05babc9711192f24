#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline Rational rat_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r))
        throw std::domain_error("rational is not an integer: " + r.str());
    return numerator(r);
}

/// Parses "a/b", an integer string, or a plain decimal such as "0.25"
/// (converted exactly by place value). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exact fraction rendered as a decimal string with the given number of
/// significant digits (round half away from zero).
std::string decimal_string(const Rational& r, int significant_digits = 12);

double to_double(const Rational& r);

}  // namespace sympv
