#include "sympv/rational.hpp"

#include <cctype>
#include <sstream>

namespace sympv {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den))
            throw std::invalid_argument("malformed rational: " + s);
        BigInt d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rational(BigInt(num), d);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if (frac.empty() || !is_integer_literal(whole.empty() ? "0" : whole))
            throw std::invalid_argument("malformed decimal: " + s);
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed decimal: " + s);
        const bool neg = !whole.empty() && whole[0] == '-';
        BigInt w = whole.empty() || whole == "-" || whole == "+" ? BigInt(0)
                                                                 : boost::multiprecision::abs(BigInt(whole));
        BigInt scale = int_pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt value = w * scale + BigInt(frac);
        if (neg) value = -value;
        return Rational(value, scale);
    }
    if (!is_integer_literal(s)) throw std::invalid_argument("malformed rational: " + s);
    return Rational(BigInt(s));
}

std::string decimal_string(const Rational& r, int significant_digits) {
    if (r == 0) return "0";
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;

    // Position of the leading digit: smallest e with num/den < 10^e.
    int exp10 = 0;
    BigInt lo = num, hi = den;
    while (lo >= hi) { hi *= 10; ++exp10; }
    while (lo * 10 < hi) { lo *= 10; --exp10; }
    // Now 10^(exp10-1) <= num/den < 10^exp10.

    // Scale so that we get `significant_digits` integer digits, then round.
    const int shift = significant_digits - exp10;
    BigInt scaled_num = num;
    BigInt scaled_den = den;
    if (shift >= 0)
        scaled_num *= int_pow(BigInt(10), static_cast<unsigned>(shift));
    else
        scaled_den *= int_pow(BigInt(10), static_cast<unsigned>(-shift));
    BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);  // half away from zero (sign split off)
    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > significant_digits) {  // rounding carried over
        ++exp10;
        ds.pop_back();
    }

    std::string out;
    if (exp10 > 0 && exp10 <= significant_digits + 3) {
        // plain notation, decimal point inside or right of the digits
        if (exp10 >= static_cast<int>(ds.size())) {
            out = ds + std::string(exp10 - ds.size(), '0');
        } else {
            out = ds.substr(0, exp10) + "." + ds.substr(exp10);
        }
    } else if (exp10 <= 0 && exp10 > -4) {
        out = "0." + std::string(-exp10, '0') + ds;
    } else {
        out = ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    // trim trailing zeros after a decimal point
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace sympv
