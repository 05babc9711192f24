#pragma once

#include "sympv/trunc_series.hpp"

namespace sympv {

// Marker slot conventions:
//   peak family:   slot 0 = y (parts), slot 1 = q (peak count), slot 2 = h (height sum)
//   valley family: slot 0 = y (parts), slot 1 = p (valley count), slot 2 = d (depth sum)
inline constexpr int kSlotParts = 0;
inline constexpr int kSlotCount = 1;
inline constexpr int kSlotMagnitude = 2;

/// Four-variable series counting compositions by size, parts, number of
/// symmetric peaks and total peak height, truncated at x-degree N.
TruncSeries build_hsp_series(int N);

/// Valley-family analogue: parts, number of symmetric valleys, total depth.
TruncSeries build_dsv_series(int N);

/// Three-variable specialization counting compositions by size, parts and
/// number of symmetric peaks, built directly (not by substituting into the
/// four-variable series); used to cross-check the height-marker collapse.
TruncSeries build_sp_marginal_series(int N);

/// Valley-count analogue of build_sp_marginal_series.
TruncSeries build_sv_marginal_series(int N);

/// Closed rational generating functions for the aggregate sequences; each is
/// expanded exactly to degree N as numerator times denominator reciprocal.
enum class GfKind {
    hsp_total,  // total peak heights over C_n
    hsp_nk,     // grid over (n, k); marker slot 0 carries k
    dsv_total,  // total valley depths over C_n
    dsv_nk,     // grid over (n, k)
};

TruncSeries rational_gf(GfKind kind, int N);

/// Coefficient of x^n y^k with any remaining markers required to be absent.
Rational coeff_nk(const TruncSeries& s, int n, int k);

}  // namespace sympv
