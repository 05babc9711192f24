#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympv/compositions.hpp"
#include "sympv/series_builders.hpp"

using namespace sympv;

TEST_CASE("reciprocal of 1 - x is the geometric series") {
    TruncSeries s = TruncSeries::constant(4, 1) - TruncSeries::monomial(4, 1, 1);
    const TruncSeries inv = s.reciprocal();
    for (int n = 0; n <= 4; ++n) CHECK(inv.coeff(n).constant_value() == 1);
}

TEST_CASE("series times its reciprocal is one") {
    TruncSeries s = TruncSeries::constant(8, 1) - TruncSeries::monomial(8, 2, 1);
    const TruncSeries prod = s * s.reciprocal();
    CHECK(prod == TruncSeries::constant(8, 1));

    // with marker content above the constant term
    TruncSeries t = TruncSeries::constant(6, 3) + TruncSeries::monomial(6, 5, 2, {1, 2, 0});
    CHECK(t * t.reciprocal() == TruncSeries::constant(6, 1));
}

TEST_CASE("reciprocal rejects non-invertible constant terms") {
    CHECK_THROWS_AS(TruncSeries::monomial(4, 1, 1).reciprocal(), NonInvertibleError);
    CHECK_THROWS_AS(TruncSeries::monomial(4, 1, 0, {1, 0, 0}).reciprocal(), NonInvertibleError);
}

TEST_CASE("composition generating function from first principles") {
    // 1 / (1 - x y (1 + x + x^2 + ...)): coefficient of x^n y^k counts C_{n,k}
    const int N = 12;
    TruncSeries geom(N);
    for (int j = 0; j <= N; ++j) geom.coeff_ref(j).add_term({0, 0, 0}, 1);
    const TruncSeries s =
        (TruncSeries::constant(N, 1) - TruncSeries::monomial(N, 1, 1, {1, 0, 0}) * geom).reciprocal();
    for (int n = 0; n <= N; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(coeff_nk(s, n, k) == Rational(composition_count(n, k)));
}

TEST_CASE("four-variable peak series matches the joint histogram") {
    const int N = 10;
    const TruncSeries s = build_hsp_series(N);
    CHECK(s.coeff(5).coeff({3, 1, 2}) == 1);  // composition 131
    for (int n = 0; n <= N; ++n) {
        const auto joint = joint_distribution(n, Family::peak);
        std::map<JointKey, BigInt> from_series;
        for (const auto& [e, c] : s.coeff(n).terms()) {
            REQUIRE(is_integer(c));
            from_series[e] = numerator(c);
        }
        CHECK(from_series == joint);
    }
}

TEST_CASE("four-variable valley series matches the joint histogram") {
    const int N = 10;
    const TruncSeries s = build_dsv_series(N);
    CHECK(s.coeff(5).coeff({3, 1, 1}) == 1);  // composition 212
    for (int n = 0; n <= N; ++n) {
        const auto joint = joint_distribution(n, Family::valley);
        std::map<JointKey, BigInt> from_series;
        for (const auto& [e, c] : s.coeff(n).terms()) {
            REQUIRE(is_integer(c));
            from_series[e] = numerator(c);
        }
        CHECK(from_series == joint);
    }
}

TEST_CASE("markers set to one recover the composition counts") {
    const int N = 9;
    for (const TruncSeries& s : {build_hsp_series(N), build_dsv_series(N)}) {
        const TruncSeries marg = s.substitute_marker_one(kSlotCount).substitute_marker_one(kSlotMagnitude);
        for (int n = 0; n <= N; ++n) {
            Rational row = 0;
            for (int k = 0; k <= n; ++k) {
                const Rational c = coeff_nk(marg, n, k);
                CHECK(c == Rational(composition_count(n, k)));
                row += c;
            }
            CHECK(row == Rational(composition_count(n)));
        }
    }
}

TEST_CASE("collapsing the magnitude marker gives the direct count series") {
    const int N = 9;
    CHECK(build_hsp_series(N).substitute_marker_one(kSlotMagnitude) == build_sp_marginal_series(N));
    CHECK(build_dsv_series(N).substitute_marker_one(kSlotMagnitude) == build_sv_marginal_series(N));
}

TEST_CASE("marker moments give the aggregate sequences") {
    const TruncSeries s = build_hsp_series(10);
    const TruncSeries heights = s.marker_moment(kSlotMagnitude);
    CHECK(heights.coeff(4).constant_value() == 1);
    CHECK(heights.coeff(5).constant_value() == 4);
    CHECK(heights.coeff(6).constant_value() == 12);

    const TruncSeries counts = s.marker_moment(kSlotCount);
    CHECK(counts.coeff(5).constant_value() == 3);

    // a marker-free series has a zero moment
    const TruncSeries plain = TruncSeries::constant(10, 7) + TruncSeries::monomial(10, 2, 3);
    for (int n = 0; n <= 10; ++n) CHECK(plain.marker_moment(kSlotCount).coeff(n).is_zero());
}

TEST_CASE("rational generating functions: totals") {
    const TruncSeries hsp = rational_gf(GfKind::hsp_total, 14);
    CHECK(hsp.coeff(5).constant_value() == 4);
    CHECK(hsp.coeff(8).constant_value() == 84);
    CHECK(hsp.coeff(14).constant_value() == 12372);

    const TruncSeries dsv = rational_gf(GfKind::dsv_total, 14);
    CHECK(dsv.coeff(5).constant_value() == 1);
    CHECK(dsv.coeff(8).constant_value() == 17);
    CHECK(dsv.coeff(14).constant_value() == 2662);
}

TEST_CASE("rational generating functions: grids match enumeration") {
    const int N = 12;
    const TruncSeries hsp_grid = rational_gf(GfKind::hsp_nk, N);
    const TruncSeries dsv_grid = rational_gf(GfKind::dsv_nk, N);
    CHECK(coeff_nk(hsp_grid, 5, 3) == 2);
    CHECK(coeff_nk(hsp_grid, 5, 4) == 2);
    CHECK(coeff_nk(dsv_grid, 5, 3) == 1);
    CHECK(coeff_nk(dsv_grid, 4, 3) == 0);

    for (int n = 0; n <= N; ++n) {
        std::vector<BigInt> hsp_brute(static_cast<std::size_t>(n) + 1), dsv_brute(hsp_brute);
        for_each_composition(n, std::nullopt, [&](std::span<const int> parts) {
            const StatRecord r = stat_record(parts);
            hsp_brute[parts.size()] += r.hsp;
            dsv_brute[parts.size()] += r.dsv;
        });
        for (int k = 0; k <= n; ++k) {
            CHECK(coeff_nk(hsp_grid, n, k) == Rational(hsp_brute[static_cast<std::size_t>(k)]));
            CHECK(coeff_nk(dsv_grid, n, k) == Rational(dsv_brute[static_cast<std::size_t>(k)]));
        }
    }
}

TEST_CASE("grid functions marginalize to the total functions") {
    const int N = 12;
    for (auto [grid_kind, total_kind] :
         {std::pair{GfKind::hsp_nk, GfKind::hsp_total}, std::pair{GfKind::dsv_nk, GfKind::dsv_total}}) {
        const TruncSeries grid = rational_gf(grid_kind, N);
        const TruncSeries total = rational_gf(total_kind, N);
        for (int n = 0; n <= N; ++n) {
            Rational sum = 0;
            for (int k = 0; k <= n; ++k) sum += coeff_nk(grid, n, k);
            CHECK(sum == total.coeff(n).constant_value());
        }
    }
}

TEST_CASE("full-series moments equal the rational functions") {
    const int N = 11;
    const TruncSeries hsp_series = build_hsp_series(N);
    const TruncSeries dsv_series = build_dsv_series(N);
    const TruncSeries hsp_total = rational_gf(GfKind::hsp_total, N);
    const TruncSeries dsv_total = rational_gf(GfKind::dsv_total, N);
    const TruncSeries hsp_grid = rational_gf(GfKind::hsp_nk, N);
    const TruncSeries dsv_grid = rational_gf(GfKind::dsv_nk, N);
    for (int n = 0; n <= N; ++n) {
        CHECK(hsp_series.marker_moment(kSlotMagnitude).coeff(n).constant_value() ==
              hsp_total.coeff(n).constant_value());
        CHECK(dsv_series.marker_moment(kSlotMagnitude).coeff(n).constant_value() ==
              dsv_total.coeff(n).constant_value());
        for (int k = 0; k <= n; ++k) {
            CHECK(hsp_series.coeff(n).select(kSlotParts, k).moment(kSlotMagnitude) ==
                  coeff_nk(hsp_grid, n, k));
            CHECK(dsv_series.coeff(n).select(kSlotParts, k).moment(kSlotMagnitude) ==
                  coeff_nk(dsv_grid, n, k));
        }
    }
}

TEST_CASE("truncation coherence") {
    const TruncSeries big = build_hsp_series(12);
    CHECK(big.truncated(7) == build_hsp_series(7));
    const TruncSeries gf_big = rational_gf(GfKind::dsv_nk, 14);
    CHECK(gf_big.truncated(9) == rational_gf(GfKind::dsv_nk, 9));
}
