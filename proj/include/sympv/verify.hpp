#pragma once

#include "sympv/report.hpp"

namespace sympv {

struct VerifyOptions {
    int max_n = 12;   // exhaustive-enumeration ceiling (series paths cap at 14)
    bool deep = false;  // raises bounds and Monte Carlo trial counts
};

/// Runs the full cross-verification matrix: enumeration vs series vs closed
/// forms vs summation formulas vs geometric-sample formulas; findings (such
/// as the published variance expressions disagreeing with the oracle) are
/// reported without failing the run.
Report run_verification(const VerifyOptions& options);

}  // namespace sympv
