#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympv/closed_forms.hpp"

using namespace sympv;

TEST_CASE("quadratic field arithmetic") {
    const QuadNumber s{0, 1};  // sqrt(-3)
    CHECK(s * s == QuadNumber{-3, 0});

    const QuadNumber w{1, 1};  // 1 + sqrt(-3)
    CHECK(quad_pow(w, 3) == QuadNumber{-8, 0});
    CHECK(quad_pow(w, 6) == QuadNumber{64, 0});

    const QuadNumber a{Rational(2, 3), Rational(-1, 5)};
    CHECK(a / a == QuadNumber{1, 0});
    CHECK((a * a.conj()).re == a.norm());
    CHECK((a * a.conj()).im == 0);
    CHECK_THROWS_AS(a / QuadNumber{}, std::domain_error);
}

TEST_CASE("closed-form anchors") {
    CHECK(hsp_closed(5) == 4);
    CHECK(hsp_closed(4) == 1);
    CHECK(hsp_closed(8) == 84);
    CHECK(dsv_closed(8) == 17);
    CHECK(dsv_closed(5) == 1);
    CHECK(dsv_closed(3) == 0);
}

TEST_CASE("closed forms match the frozen sequences") {
    const std::vector<long long> hsp{0, 0, 0, 0, 1, 4, 12, 33, 84, 204, 481, 1108, 2508, 5601, 12372};
    const std::vector<long long> dsv{0, 0, 0, 0, 0, 1, 2, 7, 17, 43, 101, 236, 535, 1202, 2662};
    for (int n = 0; n <= 14; ++n) {
        CHECK(hsp_closed(n) == hsp[static_cast<std::size_t>(n)]);
        CHECK(dsv_closed(n) == dsv[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("imaginary parts cancel and values are nonnegative integers up to 200") {
    for (int n = 0; n <= 200; ++n) {
        CHECK_NOTHROW(hsp_closed(n));
        CHECK_NOTHROW(dsv_closed(n));
        CHECK(hsp_closed(n) >= 0);
        CHECK(dsv_closed(n) >= 0);
    }
}

TEST_CASE("recurrence agrees with the closed forms") {
    for (SeqKind kind : {SeqKind::hsp, SeqKind::dsv}) {
        const RecurrenceReport r18 = closed_recurrence_check(kind, 18);
        CHECK(r18.all_equal);
        const RecurrenceReport r200 = closed_recurrence_check(kind, 200);
        CHECK(r200.all_equal);
        CHECK(r200.mismatch_indices.empty());
    }
    // degenerate prefix
    const RecurrenceReport tiny = closed_recurrence_check(SeqKind::hsp, 3);
    CHECK(tiny.all_equal);
    for (const BigInt& v : tiny.recurrence_values) CHECK(v == 0);
}

TEST_CASE("validity range starts at zero") {
    CHECK(closed_form_validity_start(SeqKind::hsp, 14) == 0);
    CHECK(closed_form_validity_start(SeqKind::dsv, 14) == 0);
}

TEST_CASE("asymptotic ratio hsp(n) / (n 2^(n-1)) stays near 1/7") {
    for (int n : {50, 100, 150, 200}) {
        const Rational ratio =
            Rational(hsp_closed(n)) / Rational(BigInt(n) * int_pow(BigInt(2), static_cast<unsigned>(n - 1)));
        CHECK(ratio > Rational(12, 100));
        CHECK(ratio < Rational(16, 100));
    }
}
