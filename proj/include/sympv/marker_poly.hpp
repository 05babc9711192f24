#pragma once

#include <array>
#include <map>
#include <ostream>

#include "sympv/rational.hpp"

namespace sympv {

/// Exponent tuple for up to three marker variables. Slot meaning is fixed by
/// the series that owns the polynomial, e.g. (y, q, h) or (y, p, d).
using MarkerExp = std::array<int, 3>;

/// Sparse polynomial in the marker variables with exact rational
/// coefficients. Zero coefficients are never stored.
class MarkerPoly {
  public:
    MarkerPoly() = default;
    explicit MarkerPoly(Rational constant) {
        if (constant != 0) terms_[{0, 0, 0}] = std::move(constant);
    }

    static MarkerPoly monomial(Rational coeff, MarkerExp exp) {
        MarkerPoly p;
        if (coeff != 0) p.terms_[exp] = std::move(coeff);
        return p;
    }

    const std::map<MarkerExp, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == MarkerExp{0, 0, 0});
    }

    Rational constant_value() const {
        auto it = terms_.find({0, 0, 0});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coeff(const MarkerExp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const MarkerExp& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MarkerPoly& operator+=(const MarkerPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MarkerPoly& operator-=(const MarkerPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MarkerPoly operator+(MarkerPoly a, const MarkerPoly& b) { return a += b; }
    friend MarkerPoly operator-(MarkerPoly a, const MarkerPoly& b) { return a -= b; }

    friend MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b) {
        MarkerPoly r;
        r.add_mul(a, b);
        return r;
    }

    /// *this += a * b, optionally truncating marker exponents per slot
    /// (cap < 0 means no cap). Exponent truncation is a quotient-ring
    /// operation, exact for all retained exponents.
    void add_mul(const MarkerPoly& a, const MarkerPoly& b, const MarkerExp& caps = {-1, -1, -1}) {
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                MarkerExp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                if ((caps[0] >= 0 && e[0] > caps[0]) || (caps[1] >= 0 && e[1] > caps[1]) ||
                    (caps[2] >= 0 && e[2] > caps[2]))
                    continue;
                add_term(e, ca * cb);
            }
        }
    }

    MarkerPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend MarkerPoly operator*(MarkerPoly a, const Rational& s) { return a *= s; }
    friend MarkerPoly operator*(const Rational& s, MarkerPoly a) { return a *= s; }

    bool operator==(const MarkerPoly&) const = default;

    /// Substitutes 1 for the marker in `slot` (collapses its exponent).
    MarkerPoly substitute_one(int slot) const {
        MarkerPoly r;
        for (const auto& [e, c] : terms_) {
            MarkerExp f = e;
            f[static_cast<std::size_t>(slot)] = 0;
            r.add_term(f, c);
        }
        return r;
    }

    /// d/d(marker) evaluated with every marker set to 1: sum of
    /// coefficient * exponent over all terms.
    Rational moment(int slot) const {
        Rational m = 0;
        for (const auto& [e, c] : terms_) m += c * e[static_cast<std::size_t>(slot)];
        return m;
    }

    /// Restricts to terms whose `slot` exponent equals `value`, collapsing it.
    MarkerPoly select(int slot, int value) const {
        MarkerPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<std::size_t>(slot)] != value) continue;
            MarkerExp f = e;
            f[static_cast<std::size_t>(slot)] = 0;
            r.add_term(f, c);
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const MarkerPoly& p);

  private:
    std::map<MarkerExp, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MarkerPoly& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        static const char* names[3] = {"m0", "m1", "m2"};
        for (int s = 0; s < 3; ++s)
            if (e[static_cast<std::size_t>(s)] != 0)
                os << "*" << names[s] << "^" << e[static_cast<std::size_t>(s)];
    }
    return os;
}

}  // namespace sympv
