#include "sympv/closed_forms.hpp"

namespace sympv {

namespace {

// (-2)^n as an exact rational (n >= 0).
Rational neg2_pow(int n) {
    Rational r = int_pow(BigInt(2), static_cast<unsigned>(n));
    return (n % 2 != 0) ? -r : r;
}

BigInt finish(const QuadNumber& value, int n, const char* name) {
    if (value.im != 0)
        throw NonIntegralClosedForm(std::string(name) + "(" + std::to_string(n) +
                                    ") has nonzero irrational part " + value.im.str());
    if (!is_integer(value.re))
        throw NonIntegralClosedForm(std::string(name) + "(" + std::to_string(n) + ") = " +
                                    value.re.str());
    return numerator(value.re);
}

// The conjugate-pair contribution shared by both closed forms:
// (-33 - 15 s)(-2)^n / (441 (1 + s)^(n+1)) + conjugate, with s = sqrt(-3).
QuadNumber conjugate_pair(int n) {
    const QuadNumber coeff{-33, -15};
    const QuadNumber base{1, 1};
    const Rational scale = neg2_pow(n) / Rational(441);
    const QuadNumber term = (coeff * QuadNumber(scale)) / quad_pow(base, static_cast<unsigned>(n + 1));
    return term + term.conj();
}

}  // namespace

BigInt hsp_closed(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    // (7n - 24)/49 * 2^(n-1); at n = 0 the half power is the rational 1/2.
    const Rational two_pow_nm1 =
        n >= 1 ? Rational(int_pow(BigInt(2), static_cast<unsigned>(n - 1))) : Rational(1, 2);
    QuadNumber v{Rational(7 * n - 24, 49) * two_pow_nm1};
    v = v + conjugate_pair(n) + QuadNumber(Rational(1, 3));
    return finish(v, n, "hsp");
}

BigInt dsv_closed(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    const Rational sign = (n % 2 != 0) ? Rational(-1) : Rational(1);
    QuadNumber v{Rational(-6 * n + 7, 108) * sign +
                 Rational(21 * n - 79, 1323) * Rational(int_pow(BigInt(2), static_cast<unsigned>(n)))};
    v = v + conjugate_pair(n) + QuadNumber(Rational(1, 12));
    return finish(v, n, "dsv");
}

namespace {

// Integer polynomial multiply (dense, ascending powers).
std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<long long> gf_denominator(SeqKind which) {
    const std::vector<long long> one_minus_2x_sq = poly_mul({1, -2}, {1, -2});
    const std::vector<long long> one_minus_x3 = {1, 0, 0, -1};
    std::vector<long long> d = poly_mul(one_minus_2x_sq, one_minus_x3);
    if (which == SeqKind::dsv) {
        const std::vector<long long> one_minus_x2 = {1, 0, -1};
        d = poly_mul(d, poly_mul(one_minus_x2, one_minus_x2));
    }
    return d;
}

BigInt brute_total(SeqKind which, int n) {
    BigInt total = 0;
    for_each_composition(n, std::nullopt, [&](std::span<const int> parts) {
        const StatRecord r = stat_record(parts);
        total += which == SeqKind::hsp ? r.hsp : r.dsv;
    });
    return total;
}

}  // namespace

RecurrenceReport closed_recurrence_check(SeqKind which, int N) {
    const std::vector<long long> den = gf_denominator(which);
    const int order = static_cast<int>(den.size()) - 1;

    RecurrenceReport report;
    report.recurrence_values.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        if (n < order) {
            report.recurrence_values.push_back(brute_total(which, n));
        } else {
            BigInt v = 0;
            for (int i = 1; i <= order; ++i)
                v -= den[static_cast<std::size_t>(i)] * report.recurrence_values[static_cast<std::size_t>(n - i)];
            report.recurrence_values.push_back(std::move(v));
        }
    }
    for (int n = 0; n <= N; ++n) {
        report.closed_values.push_back(which == SeqKind::hsp ? hsp_closed(n) : dsv_closed(n));
        if (report.closed_values.back() != report.recurrence_values[static_cast<std::size_t>(n)]) {
            report.all_equal = false;
            report.mismatch_indices.push_back(n);
        }
    }
    return report;
}

int closed_form_validity_start(SeqKind which, int max_n) {
    int start = max_n + 1;
    for (int n = max_n; n >= 0; --n) {
        bool equal;
        try {
            equal = (which == SeqKind::hsp ? hsp_closed(n) : dsv_closed(n)) == brute_total(which, n);
        } catch (const NonIntegralClosedForm&) {
            equal = false;
        }
        if (!equal) break;
        start = n;
    }
    return start;
}

}  // namespace sympv
