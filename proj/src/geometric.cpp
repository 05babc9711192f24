#include "sympv/geometric.hpp"

#include <cmath>
#include <stdexcept>

#include "sympv/formulas.hpp"

namespace sympv {

GeomParams::GeomParams(Rational p_, int n_) : p(std::move(p_)), q(1 - p), n(n_) {
    if (p <= 0 || p > 1) throw std::invalid_argument("p must lie in (0, 1]");
    if (n < 0) throw std::invalid_argument("negative word length");
}

Rational expected_value(Stat stat, const GeomParams& params) {
    if (params.n < 3) return 0;
    const Rational& p = params.p;
    const Rational& q = params.q;
    const Rational len = params.n - 2;
    switch (stat) {
        case Stat::sp:
            return p * p * q / (1 - rat_pow(q, 3)) * len;
        case Stat::sv:
            return p * p * (Rational(1) / (1 - rat_pow(q, 2)) - Rational(1) / (1 - rat_pow(q, 3))) * len;
        case Stat::hsp:
            return p * q / (1 - rat_pow(q, 3)) * len;
        case Stat::dsv:
            return q * (p / (1 - rat_pow(q, 3)) - Rational(1) / rat_pow(1 + q, 2)) * len;
    }
    return 0;
}

Rational variance_formula(Stat stat, const GeomParams& params) {
    const Rational& p = params.p;
    const Rational& q = params.q;
    const Rational n = params.n;
    switch (stat) {
        case Stat::sp:
            return 2 * (n - 4) * rat_pow(p, 3) * rat_pow(q, 2) *
                       (p * (n - 5) / (24 * rat_pow(1 - q, 3)) + Rational(1) / (1 - rat_pow(q, 5))) +
                   (n - 2) * p * p * q / (1 - rat_pow(q, 3)) -
                   rat_pow(n - 2, 2) * rat_pow(p, 4) * rat_pow(q, 2) / rat_pow(1 - rat_pow(q, 3), 2);
        case Stat::hsp:
            return (n - 5) * (n - 6) * p * p * q * q / rat_pow(1 - rat_pow(q, 3), 2) +
                   2 * (n - 4) * p * q * q / (1 - rat_pow(q, 5)) +
                   (n - 2) / (1 - rat_pow(q, 3)) * (2 * q * q + p * q) -
                   p * p * q * q / rat_pow(1 - rat_pow(q, 3), 2) * rat_pow(n - 2, 2);
        case Stat::sv: {
            const Rational diff = Rational(1) / (1 - rat_pow(q, 2)) - Rational(1) / (1 - rat_pow(q, 3));
            return rat_pow(p, 4) * q * q / (1 - rat_pow(q, 3)) * (n - 5) * (n - 6) +
                   2 * rat_pow(p, 3) / (1 - rat_pow(q, 5)) * (n - 5) + p * p * diff * (n - 2) -
                   rat_pow(p, 4) * diff * diff * rat_pow(n - 2, 2);
        }
        case Stat::dsv:
            throw std::invalid_argument("no published variance expression for dsv");
    }
    return 0;
}

namespace {

// 1 / (1 - q^e)
Rational geo(const Rational& q, unsigned e) { return Rational(1) / (1 - rat_pow(q, e)); }

}  // namespace

TruncSeries geometric_marker_series(Stat stat, const Rational& p, int N, int jet_order) {
    if (p <= 0 || p > 1) throw std::invalid_argument("p must lie in (0, 1]");
    if (jet_order < 1 || jet_order > 2) throw std::invalid_argument("jet order must be 1 or 2");
    const Rational q = 1 - p;
    const MarkerExp caps{jet_order, -1, -1};
    const int J = jet_order;

    // The kernel S(z, v): word = sequence of blocks led by a first letter; the
    // letter-value sums collapse to closed rational forms, one per power of
    // the window weight z^2 v.
    TruncSeries kernel(N, caps);
    switch (stat) {
        case Stat::sp:
            for (int m = 0; m <= J && 2 * m + 1 <= N; ++m)
                kernel.coeff_ref(2 * m + 1)
                    .add_term({m, 0, 0}, rat_pow(p, static_cast<unsigned>(m + 1)) *
                                             rat_pow(q, static_cast<unsigned>(m)) *
                                             geo(q, static_cast<unsigned>(2 * m + 1)));
            break;
        case Stat::sv:
            for (int m = 0; m <= J && 2 * m + 1 <= N; ++m) {
                Rational c = 0;
                for (int i = 0; i <= m; ++i) {
                    const Rational sign = (i % 2 != 0) ? -1 : 1;
                    c += sign * Rational(binom(m, i)) * geo(q, static_cast<unsigned>(m + 1 + i));
                }
                kernel.coeff_ref(2 * m + 1).add_term({m, 0, 0},
                                                     rat_pow(p, static_cast<unsigned>(m + 1)) * c);
            }
            break;
        case Stat::hsp: {
            // Height marker: per window, sum over heights j of (u^j - 1) q^(j-1)
            // has jet coefficients q^(t-1)/p^(t+1) at v^t.
            MarkerPoly w;
            for (int t = 1; t <= J; ++t)
                w.add_term({t, 0, 0},
                           rat_pow(q, static_cast<unsigned>(t - 1)) / rat_pow(p, static_cast<unsigned>(t + 1)));
            MarkerPoly w_power(Rational(1));
            for (int m = 0; m <= J && 2 * m + 1 <= N; ++m) {
                const Rational base = rat_pow(p, static_cast<unsigned>(2 * m + 1)) *
                                      rat_pow(q, static_cast<unsigned>(m)) *
                                      geo(q, static_cast<unsigned>(2 * m + 1));
                kernel.coeff_ref(2 * m + 1) += w_power * base;
                MarkerPoly next;
                next.add_mul(w_power, w, caps);
                w_power = std::move(next);
            }
            break;
        }
        case Stat::dsv: {
            // Depth marker; the letter-value sums below are the closed forms of
            // sum_a q^((a-1)(2m+1)) * (per-window depth polynomial)^m for m <= 2.
            if (N >= 1) kernel.coeff_ref(1).add_term({0, 0, 0}, 1);
            const Rational x1 = q * q / (rat_pow(1 - q * q, 2) * (1 - rat_pow(q, 3)));
            if (N >= 3) kernel.coeff_ref(3).add_term({1, 0, 0}, rat_pow(p, 3) * x1);
            if (J >= 2) {
                const Rational x2 = rat_pow(q, 4) / (rat_pow(1 - q * q, 3) * (1 - rat_pow(q, 3)));
                const Rational diag = rat_pow(q, 3) * (1 + rat_pow(q, 3)) / rat_pow(1 - rat_pow(q, 3), 3);
                const Rational off =
                    q == 0 ? Rational(0)
                           : 2 / rat_pow(1 - q, 2) *
                                 (q * (rat_pow(q, 4) / rat_pow(1 - rat_pow(q, 4), 2) - rat_pow(q, 4)) -
                                  q * q * (rat_pow(q, 3) * (1 + rat_pow(q, 3)) / rat_pow(1 - rat_pow(q, 3), 3) -
                                           rat_pow(q, 3)) +
                                  2 * rat_pow(q, 7) / rat_pow(1 - rat_pow(q, 3), 3));
                const Rational x3 = (diag + off) * geo(q, 5);
                if (N >= 3) kernel.coeff_ref(3).add_term({2, 0, 0}, rat_pow(p, 3) * x2);
                if (N >= 5) kernel.coeff_ref(5).add_term({2, 0, 0}, rat_pow(p, 5) * x3);
            }
            break;
        }
    }

    return (TruncSeries::constant(N, 1, caps) - kernel).reciprocal();
}

Rational jet_variance(const TruncSeries& jets, int n) {
    const Rational c1 = jets.coeff(n).coeff({1, 0, 0});
    const Rational c2 = jets.coeff(n).coeff({2, 0, 0});
    return 2 * c2 + c1 - c1 * c1;
}

namespace {

struct ScaledDp {
    // State indexed by (older letter, newer letter), 1-based letters.
    int cap;
    std::vector<BigInt> weight;
    std::array<std::vector<BigInt>, 4> first;   // sum of stat * weight
    std::array<std::vector<BigInt>, 4> second;  // sum of stat^2 * weight

    explicit ScaledDp(int L)
        : cap(L), weight(static_cast<std::size_t>(L) * L) {
        for (auto& v : first) v.assign(weight.size(), 0);
        for (auto& v : second) v.assign(weight.size(), 0);
    }
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(cap) +
               static_cast<std::size_t>(b - 1);
    }
};

// Window increments for (a, b, c) with a == c already required.
std::array<long long, 4> window_delta(int c, int b) {
    std::array<long long, 4> d{0, 0, 0, 0};
    if (c < b) {
        d[0] = 1;       // sp
        d[2] = b - c;   // hsp
    } else if (c > b) {
        d[1] = 1;       // sv
        d[3] = c - b;   // dsv
    }
    return d;
}

Rational tail_bound_for(Stat stat, const Rational& p, const Rational& q, int n, int L) {
    if (n < 3) return 0;
    const Rational qL = rat_pow(q, static_cast<unsigned>(L));
    switch (stat) {
        case Stat::sp:
        case Stat::sv:
            // stat <= n - 2 always; P(any letter > L) <= n q^L.
            return Rational(n - 2) * n * qL;
        case Stat::hsp:
        case Stat::dsv:
            // stat <= (n - 2) * max letter; E[max * 1{max > L}] <= n q^L (L+1-Lq)/p.
            return Rational(n - 2) * n * qL * (Rational(L + 1) - Rational(L) * q) / p;
    }
    return 0;
}

}  // namespace

std::map<int, std::array<OracleMoments, 4>> oracle_moments_sweep(const Rational& p, int n_max,
                                                                 int letter_cap) {
    if (p <= 0 || p > 1) throw std::invalid_argument("p must lie in (0, 1]");
    if (letter_cap < 2) throw std::invalid_argument("letter cap must be at least 2");
    const Rational q = 1 - p;
    const int L = letter_cap;

    std::map<int, std::array<OracleMoments, 4>> out;
    const auto zero_row = [&](int n) {
        std::array<OracleMoments, 4> row;
        for (std::size_t s = 0; s < 4; ++s)
            row[s] = {0, 0, tail_bound_for(kAllStats[s], p, q, n, L)};
        return row;
    };
    for (int n = 0; n <= std::min(n_max, 2); ++n) out[n] = zero_row(n);
    if (n_max < 3) return out;

    // Integer-scaled letter weights: w_c = p q^(c-1) * beta^L where p = alpha/beta.
    const BigInt alpha = numerator(p);
    const BigInt beta = denominator(p);
    const BigInt gamma = beta - alpha;  // q = gamma / beta
    std::vector<BigInt> w(static_cast<std::size_t>(L) + 1);
    for (int c = 1; c <= L; ++c)
        w[static_cast<std::size_t>(c)] =
            alpha * int_pow(gamma, static_cast<unsigned>(c - 1)) * int_pow(beta, static_cast<unsigned>(L - c));
    const BigInt scale_step = int_pow(beta, static_cast<unsigned>(L));

    ScaledDp dp(L);
    for (int a = 1; a <= L; ++a)
        for (int b = 1; b <= L; ++b)
            dp.weight[dp.idx(a, b)] = w[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)];

    BigInt denom = scale_step * scale_step;  // beta^(2L) after two letters

    for (int len = 3; len <= n_max; ++len) {
        ScaledDp next(L);
        // Column sums over the older letter for each newer letter b.
        std::vector<BigInt> tw(static_cast<std::size_t>(L) + 1);
        std::array<std::vector<BigInt>, 4> t1, t2;
        for (auto& v : t1) v.assign(static_cast<std::size_t>(L) + 1, 0);
        for (auto& v : t2) v.assign(static_cast<std::size_t>(L) + 1, 0);
        for (int a = 1; a <= L; ++a)
            for (int b = 1; b <= L; ++b) {
                const std::size_t i = dp.idx(a, b);
                tw[static_cast<std::size_t>(b)] += dp.weight[i];
                for (std::size_t s = 0; s < 4; ++s) {
                    t1[s][static_cast<std::size_t>(b)] += dp.first[s][i];
                    t2[s][static_cast<std::size_t>(b)] += dp.second[s][i];
                }
            }

        for (int b = 1; b <= L; ++b) {
            for (int c = 1; c <= L; ++c) {
                const std::size_t dst = next.idx(b, c);
                const std::size_t corr = dp.idx(c, b);  // states whose older letter equals c
                const auto delta = window_delta(c, b);
                next.weight[dst] = tw[static_cast<std::size_t>(b)] * w[static_cast<std::size_t>(c)];
                for (std::size_t s = 0; s < 4; ++s) {
                    BigInt s1 = t1[s][static_cast<std::size_t>(b)];
                    BigInt s2 = t2[s][static_cast<std::size_t>(b)];
                    if (delta[s] != 0) {
                        s1 += delta[s] * dp.weight[corr];
                        s2 += 2 * delta[s] * dp.first[s][corr] + delta[s] * delta[s] * dp.weight[corr];
                    }
                    next.first[s][dst] = s1 * w[static_cast<std::size_t>(c)];
                    next.second[s][dst] = s2 * w[static_cast<std::size_t>(c)];
                }
            }
        }
        dp = std::move(next);
        denom *= scale_step;

        std::array<OracleMoments, 4> row;
        for (std::size_t s = 0; s < 4; ++s) {
            BigInt sum1 = 0, sum2 = 0;
            for (const BigInt& v : dp.first[s]) sum1 += v;
            for (const BigInt& v : dp.second[s]) sum2 += v;
            row[s] = {Rational(sum1, denom), Rational(sum2, denom),
                      tail_bound_for(kAllStats[s], p, q, len, L)};
        }
        out[len] = row;
    }
    return out;
}

OracleMoments exact_oracle_moments(Stat stat, const GeomParams& params, int letter_cap) {
    const auto sweep = oracle_moments_sweep(params.p, params.n, letter_cap);
    return sweep.at(params.n)[static_cast<std::size_t>(stat)];
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform in the open interval (0,1): ((x >> 11) + 0.5) * 2^-53.
double to_unit(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::vector<int> sample_word(const GeomParams& params, std::uint64_t seed, std::uint64_t index) {
    std::vector<int> word(static_cast<std::size_t>(params.n));
    if (params.p == 1) {
        for (int& c : word) c = 1;
        return word;
    }
    const double log_q = std::log(to_double(params.q));
    const std::uint64_t stream = splitmix64(seed ^ ((index + 1) * 0xD1342543DE82EF95ull));
    for (std::size_t j = 0; j < word.size(); ++j) {
        const double u = to_unit(splitmix64(stream ^ ((j + 1) * 0x9E3779B97F4A7C15ull)));
        word[j] = 1 + static_cast<int>(std::floor(std::log(u) / log_q));
    }
    return word;
}

MCSummary monte_carlo(Stat stat, const GeomParams& params, std::uint64_t trials,
                      std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("at least one trial required");
    unsigned long long sum = 0;
    unsigned long long sum_sq = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::vector<int> word = sample_word(params, seed, i);
        const std::uint64_t value = stat_record(word).get(stat);
        sum += value;
        sum_sq += value * value;
    }
    MCSummary s;
    s.trials = trials;
    s.seed = seed;
    const double t = static_cast<double>(trials);
    s.mean = static_cast<double>(sum) / t;
    if (trials > 1) {
        const double centered = static_cast<double>(sum_sq) - t * s.mean * s.mean;
        s.variance = std::max(0.0, centered / (t - 1.0));
    }
    s.std_error = std::sqrt(s.variance / t);
    return s;
}

}  // namespace sympv
