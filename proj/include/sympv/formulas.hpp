#pragma once

#include <stdexcept>

#include "sympv/rational.hpp"

namespace sympv {

/// Thrown by sp_count_nk for k < 4, where the summation formula does not
/// apply (use brute force or the series moment instead).
struct FormulaRangeError : std::domain_error {
    FormulaRangeError() : std::domain_error("k out of formula range") {}
};

/// Binomial coefficient extended to return 0 whenever a < 0, b < 0 or a < b,
/// so boundary terms of the summation formulas can be taken literally.
BigInt binom(long long a, long long b);

/// Total height of symmetric peaks over compositions of n with exactly k
/// parts, by direct summation.
BigInt hsp_nk(int n, int k);

/// Total depth of symmetric valleys over compositions of n with exactly k
/// parts, by direct summation.
BigInt dsv_nk(int n, int k);

/// Number of symmetric peaks over compositions of n with exactly k parts
/// (k >= 4 only).
BigInt sp_count_nk(int n, int k);

/// The k = 3 peak-height sum read literally, without requiring the bordering
/// part to fit (terms may be negative). Exists only so the verification
/// report can show where the literal reading diverges from enumeration.
BigInt hsp_n3_unguarded(int n);

}  // namespace sympv
