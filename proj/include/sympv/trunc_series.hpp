#pragma once

#include <stdexcept>
#include <vector>

#include "sympv/marker_poly.hpp"

namespace sympv {

/// Thrown by TruncSeries::reciprocal when the constant term is zero or
/// carries a marker part.
struct NonInvertibleError : std::domain_error {
    NonInvertibleError() : std::domain_error("non-invertible constant term") {}
};

/// Formal power series in one size variable, truncated at degree trunc(),
/// with MarkerPoly coefficients. All ring operations are exact for degrees
/// <= trunc(); truncation (in the size variable and, optionally, in marker
/// exponents) is a quotient-ring homomorphism.
class TruncSeries {
  public:
    explicit TruncSeries(int trunc, MarkerExp marker_caps = {-1, -1, -1})
        : trunc_(trunc), caps_(marker_caps), coeffs_(static_cast<std::size_t>(trunc) + 1) {
        if (trunc < 0) throw std::invalid_argument("negative truncation degree");
    }

    static TruncSeries constant(int trunc, Rational value, MarkerExp caps = {-1, -1, -1}) {
        TruncSeries s(trunc, caps);
        s.coeffs_[0] = MarkerPoly(std::move(value));
        return s;
    }

    /// coeff * x^xdeg * markers^exp
    static TruncSeries monomial(int trunc, Rational coeff, int xdeg, MarkerExp exp = {0, 0, 0},
                                MarkerExp caps = {-1, -1, -1}) {
        TruncSeries s(trunc, caps);
        if (xdeg <= trunc) s.coeffs_[static_cast<std::size_t>(xdeg)] = MarkerPoly::monomial(std::move(coeff), exp);
        return s;
    }

    int trunc() const { return trunc_; }
    const MarkerExp& marker_caps() const { return caps_; }

    const MarkerPoly& coeff(int n) const {
        static const MarkerPoly zero;
        if (n < 0 || n > trunc_) return zero;
        return coeffs_[static_cast<std::size_t>(n)];
    }
    MarkerPoly& coeff_ref(int n) { return coeffs_[static_cast<std::size_t>(n)]; }

    void set_coeff(int n, MarkerPoly p) {
        if (n >= 0 && n <= trunc_) coeffs_[static_cast<std::size_t>(n)] = std::move(p);
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_compatible(o);
        for (int n = 0; n <= trunc_; ++n) coeffs_[static_cast<std::size_t>(n)] += o.coeff(n);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_compatible(o);
        for (int n = 0; n <= trunc_; ++n) coeffs_[static_cast<std::size_t>(n)] -= o.coeff(n);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        TruncSeries r(a.trunc_, a.caps_);
        for (int i = 0; i <= a.trunc_; ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; i + j <= a.trunc_; ++j) {
                if (b.coeff(j).is_zero()) continue;
                r.coeffs_[static_cast<std::size_t>(i + j)].add_mul(a.coeff(i), b.coeff(j), a.caps_);
            }
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }

    bool operator==(const TruncSeries&) const = default;

    /// Multiplicative inverse modulo x^(trunc+1). The constant term must be
    /// a nonzero pure rational.
    TruncSeries reciprocal() const {
        if (!coeffs_[0].is_constant() || coeffs_[0].constant_value() == 0) throw NonInvertibleError();
        const Rational inv0 = Rational(1) / coeffs_[0].constant_value();
        TruncSeries r(trunc_, caps_);
        r.coeffs_[0] = MarkerPoly(inv0);
        for (int n = 1; n <= trunc_; ++n) {
            MarkerPoly acc;
            for (int i = 1; i <= n; ++i) {
                if (coeff(i).is_zero() || r.coeff(n - i).is_zero()) continue;
                acc.add_mul(coeff(i), r.coeff(n - i), caps_);
            }
            acc *= -inv0;
            r.coeffs_[static_cast<std::size_t>(n)] = std::move(acc);
        }
        return r;
    }

    /// Substitutes 1 for the marker in `slot`, coefficient by coefficient.
    TruncSeries substitute_marker_one(int slot) const {
        TruncSeries r(trunc_, caps_);
        for (int n = 0; n <= trunc_; ++n) r.coeffs_[static_cast<std::size_t>(n)] = coeff(n).substitute_one(slot);
        return r;
    }

    /// d/d(marker in slot) with all markers then set to 1; the result has
    /// pure rational coefficients.
    TruncSeries marker_moment(int slot) const {
        TruncSeries r(trunc_);
        for (int n = 0; n <= trunc_; ++n)
            r.coeffs_[static_cast<std::size_t>(n)] = MarkerPoly(coeff(n).moment(slot));
        return r;
    }

    /// Re-truncates to a lower degree.
    TruncSeries truncated(int new_trunc) const {
        TruncSeries r(new_trunc, caps_);
        for (int n = 0; n <= new_trunc && n <= trunc_; ++n) r.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
        return r;
    }

  private:
    void check_compatible(const TruncSeries& o) const {
        if (o.trunc_ != trunc_) throw std::invalid_argument("mismatched truncation degrees");
    }

    int trunc_;
    MarkerExp caps_;
    std::vector<MarkerPoly> coeffs_;
};

}  // namespace sympv
