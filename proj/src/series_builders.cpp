#include "sympv/series_builders.hpp"

namespace sympv {

namespace {

TruncSeries one(int N) { return TruncSeries::constant(N, 1); }

// 1 - y^2 * x^shift * inner, inverted
TruncSeries inverted_block(int N, int shift, const TruncSeries& inner) {
    TruncSeries block = one(N) - TruncSeries::monomial(N, 1, shift, {2, 0, 0}) * inner;
    return block.reciprocal();
}

// (1 + c*x^d)^power as an exact polynomial series
TruncSeries binomial_factor(int N, const Rational& c, int d, int power) {
    TruncSeries base = one(N);
    if (d <= N) base.coeff_ref(d).add_term({0, 0, 0}, c);
    TruncSeries r = one(N);
    for (int i = 0; i < power; ++i) r *= base;
    return r;
}

}  // namespace

TruncSeries build_hsp_series(int N) {
    // Bracket expanded as sum_{j>=1} (q h^j - 1) x^(j-1).
    TruncSeries bracket(N);
    for (int j = 1; j - 1 <= N; ++j) {
        bracket.coeff_ref(j - 1).add_term({0, 1, j}, 1);
        bracket.coeff_ref(j - 1).add_term({0, 0, 0}, -1);
    }
    // Summands for first letter a carry an x^a factor, so a > N contributes
    // nothing below the truncation.
    TruncSeries sum(N);
    for (int a = 1; a <= N; ++a)
        sum += TruncSeries::monomial(N, 1, a, {1, 0, 0}) * inverted_block(N, 2 * a + 1, bracket);
    return (one(N) - sum).reciprocal();
}

TruncSeries build_dsv_series(int N) {
    TruncSeries sum(N);
    for (int a = 1; a <= N; ++a) {
        // Bordering letter a, inner letters a-j: sum_{j=1}^{a-1} (p d^(a-j) - 1) x^(j-1).
        TruncSeries bracket(N);
        for (int j = 1; j <= a - 1 && j - 1 <= N; ++j) {
            bracket.coeff_ref(j - 1).add_term({0, 1, a - j}, 1);
            bracket.coeff_ref(j - 1).add_term({0, 0, 0}, -1);
        }
        sum += TruncSeries::monomial(N, 1, a, {1, 0, 0}) * inverted_block(N, a + 1, bracket);
    }
    return (one(N) - sum).reciprocal();
}

TruncSeries build_sp_marginal_series(int N) {
    // Bracket (q - 1)/(1 - x) = sum_{j>=1} (q - 1) x^(j-1).
    TruncSeries bracket(N);
    for (int j = 1; j - 1 <= N; ++j) {
        bracket.coeff_ref(j - 1).add_term({0, 1, 0}, 1);
        bracket.coeff_ref(j - 1).add_term({0, 0, 0}, -1);
    }
    TruncSeries sum(N);
    for (int a = 1; a <= N; ++a)
        sum += TruncSeries::monomial(N, 1, a, {1, 0, 0}) * inverted_block(N, 2 * a + 1, bracket);
    return (one(N) - sum).reciprocal();
}

TruncSeries build_sv_marginal_series(int N) {
    TruncSeries sum(N);
    for (int a = 1; a <= N; ++a) {
        // (p - 1) * (x^(a-1) - 1)/(x - 1) = sum_{j=0}^{a-2} (p - 1) x^j.
        TruncSeries bracket(N);
        for (int j = 0; j <= a - 2 && j <= N; ++j) {
            bracket.coeff_ref(j).add_term({0, 1, 0}, 1);
            bracket.coeff_ref(j).add_term({0, 0, 0}, -1);
        }
        sum += TruncSeries::monomial(N, 1, a, {1, 0, 0}) * inverted_block(N, a + 1, bracket);
    }
    return (one(N) - sum).reciprocal();
}

TruncSeries rational_gf(GfKind kind, int N) {
    const auto x_power = [N](int d) { return TruncSeries::monomial(N, 1, d); };

    // Shared denominator factors.
    const TruncSeries one_minus_2x = binomial_factor(N, -2, 1, 1);
    const TruncSeries one_minus_x3 = binomial_factor(N, -1, 3, 1);
    const TruncSeries one_minus_x2_sq = binomial_factor(N, -1, 2, 2);
    // (1 - x - yx)^2
    TruncSeries comp = one(N);
    if (N >= 1) {
        comp.coeff_ref(1).add_term({0, 0, 0}, -1);
        comp.coeff_ref(1).add_term({1, 0, 0}, -1);
    }
    const TruncSeries comp_sq = comp * comp;

    switch (kind) {
        case GfKind::hsp_total:
            return x_power(4) * (one_minus_2x * one_minus_2x * one_minus_x3).reciprocal();
        case GfKind::hsp_nk:
            return TruncSeries::monomial(N, 1, 4, {3, 0, 0}) * (one_minus_x3 * comp_sq).reciprocal();
        case GfKind::dsv_total:
            // x^5 (1 - x)^2 / ((1 - 2x)^2 (1 - x^3) (1 - x^2)^2)
            return x_power(5) * binomial_factor(N, -1, 1, 2) *
                   (one_minus_2x * one_minus_2x * one_minus_x3 * one_minus_x2_sq).reciprocal();
        case GfKind::dsv_nk:
            // y^3 x^5 (1 - x)^2 / ((1 - x^3) (1 - x^2)^2 (1 - x - yx)^2); equals
            // the depth moment of the four-variable series and matches the
            // total-depth function at y = 1.
            return TruncSeries::monomial(N, 1, 5, {3, 0, 0}) * binomial_factor(N, -1, 1, 2) *
                   (one_minus_x3 * one_minus_x2_sq * comp_sq).reciprocal();
    }
    throw std::invalid_argument("unknown generating function kind");
}

Rational coeff_nk(const TruncSeries& s, int n, int k) {
    return s.coeff(n).coeff({k, 0, 0});
}

}  // namespace sympv
