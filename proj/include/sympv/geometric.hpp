#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sympv/compositions.hpp"
#include "sympv/trunc_series.hpp"

namespace sympv {

/// Letter distribution P{X = k} = p q^(k-1), k >= 1, plus the word length.
struct GeomParams {
    Rational p;
    Rational q;
    int n = 0;

    GeomParams(Rational p_, int n_);
};

/// Expected value of the statistic over a word of n geometric letters, as an
/// exact rational; 0 for n < 3 (no three-letter window exists).
Rational expected_value(Stat stat, const GeomParams& params);

/// The published variance expressions for sp, hsp and sv, transcribed
/// verbatim and evaluated exactly. This is a transcription, not a claim of
/// correctness: agreement with the exact oracle is a reported finding (the
/// sp expression goes negative for large n). Throws std::invalid_argument
/// for dsv, which has no published expression.
Rational variance_formula(Stat stat, const GeomParams& params);

/// Generating function over word length z for one statistic, with marker
/// slot 0 holding powers of the deviation v = u - 1 of the statistic marker
/// u, truncated at v^jet_order (jet_order <= 2; magnitude statistics have
/// unbounded marker degree per length, but every Taylor coefficient at u = 1
/// is an exact rational). The infinite sums over letter values are evaluated
/// in closed rational form, so the construction is exact.
///
/// coefficient of z^n v^0 = total probability (1 for every n);
/// coefficient of z^n v^1 = E[stat]; 2 * coefficient of z^n v^2 = E[stat(stat-1)].
TruncSeries geometric_marker_series(Stat stat, const Rational& p, int N, int jet_order = 2);

/// Variance at length n from a jet-order-2 series: 2 c2 + c1 - c1^2.
Rational jet_variance(const TruncSeries& jets, int n);

struct OracleMoments {
    Rational mean;           // E[stat * 1{every letter <= cap}]
    Rational second_moment;  // E[stat^2 * 1{every letter <= cap}]
    Rational tail_bound;     // rigorous bound on the mass excluded from the mean
};

/// Exact truncated-alphabet dynamic program over (last two letters); the
/// full-distribution mean differs from `mean` by at most `tail_bound`.
OracleMoments exact_oracle_moments(Stat stat, const GeomParams& params, int letter_cap);

/// One DP pass computing all four statistics for every length 0..n_max.
std::map<int, std::array<OracleMoments, 4>> oracle_moments_sweep(const Rational& p, int n_max,
                                                                 int letter_cap);

/// Deterministic geometric word: letter j of trial `index` is a pure function
/// of (seed, index, j) through a counter-based splitmix64 stream; the uniform
/// draw is ((x >> 11) + 0.5) * 2^-53, strictly inside (0,1). Inverse-CDF:
/// letter = 1 + floor(ln U / ln q); p = 1 yields all-ones words.
std::vector<int> sample_word(const GeomParams& params, std::uint64_t seed, std::uint64_t index);

struct MCSummary {
    std::uint64_t trials = 0;
    double mean = 0.0;
    double variance = 0.0;   // unbiased sample variance
    double std_error = 0.0;  // sqrt(variance / trials)
    std::uint64_t seed = 0;
};

/// Samples `trials` words (indices 0..trials-1) and summarizes the statistic.
/// Depends only on (stat, params, trials, seed).
MCSummary monte_carlo(Stat stat, const GeomParams& params, std::uint64_t trials,
                      std::uint64_t seed);

}  // namespace sympv
