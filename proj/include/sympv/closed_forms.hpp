#pragma once

#include <stdexcept>
#include <vector>

#include "sympv/compositions.hpp"
#include "sympv/quad_field.hpp"

namespace sympv {

/// Thrown when a closed-form evaluation does not cancel to an integer.
struct NonIntegralClosedForm : std::domain_error {
    explicit NonIntegralClosedForm(const std::string& detail)
        : std::domain_error("non-integral closed form: " + detail) {}
};

/// Total height of symmetric peaks over all compositions of n, evaluated from
/// the closed form (exact arithmetic in Q(sqrt(-3)); the imaginary parts of
/// the conjugate pair must cancel exactly).
BigInt hsp_closed(int n);

/// Total depth of symmetric valleys over all compositions of n.
BigInt dsv_closed(int n);

/// Which aggregate sequence a recurrence/grid operation refers to.
enum class SeqKind { hsp, dsv };

struct RecurrenceReport {
    bool all_equal = true;
    std::vector<int> mismatch_indices;
    std::vector<BigInt> recurrence_values;  // index 0..N
    std::vector<BigInt> closed_values;
};

/// Evaluates the sequence by the integer linear recurrence induced by the
/// rational generating function's denominator, seeded from brute force, and
/// compares elementwise with the closed form up to N.
RecurrenceReport closed_recurrence_check(SeqKind which, int N);

/// Smallest n0 such that the closed form agrees with brute force for every
/// n in [n0, max_n]; max_n + 1 if they never agree.
int closed_form_validity_start(SeqKind which, int max_n);

}  // namespace sympv
