#pragma once

#include "sympv/rational.hpp"

namespace sympv {

/// Element of the quadratic field Q(sqrt(-3)): re + im*sqrt(-3), with exact
/// rational components. sqrt(-3) squares to -3.
struct QuadNumber {
    Rational re = 0;
    Rational im = 0;

    QuadNumber() = default;
    QuadNumber(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    QuadNumber conj() const { return {re, -im}; }

    /// Field norm re^2 + 3*im^2 (zero only for the zero element).
    Rational norm() const { return re * re + 3 * im * im; }

    friend QuadNumber operator+(const QuadNumber& a, const QuadNumber& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend QuadNumber operator-(const QuadNumber& a, const QuadNumber& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend QuadNumber operator*(const QuadNumber& a, const QuadNumber& b) {
        return {a.re * b.re - 3 * a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QuadNumber operator/(const QuadNumber& a, const QuadNumber& b) {
        const Rational n = b.norm();
        if (n == 0) throw std::domain_error("division by zero in Q(sqrt(-3))");
        const QuadNumber num = a * b.conj();
        return {num.re / n, num.im / n};
    }

    bool operator==(const QuadNumber&) const = default;
};

inline QuadNumber quad_pow(QuadNumber base, unsigned exp) {
    QuadNumber r{1, 0};
    while (exp) {
        if (exp & 1) r = r * base;
        base = base * base;
        exp >>= 1;
    }
    return r;
}

}  // namespace sympv
