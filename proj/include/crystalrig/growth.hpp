#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystalrig/rigged.hpp"

namespace crystalrig {

/// Maximum number of rows the l-th partition can have: min(n-l+1, l).
int maxr(int l, int rank);

/// One stretch of the truncated partition during a growth step, together
/// with the box decomposition placed beneath it in the next partition.
struct StretchPlan {
    int length = 0;   // |s^{b_j}|
    int height = 0;   // column height of the stretch after removing the top row
    int y = 0;        // columns strictly left of the stretch (Y_j)
    int eta1 = 0;     // first row of boxes beneath
    int eta2 = 0;     // second row of boxes beneath
    int ncb = 0;      // noncontributing boxes (first row prefix)
    int cb1 = 0;      // contributing boxes ending the first row
    int cb2 = 0;      // contributing boxes in the second row
    int acon = 0;     // above contribution consumed from the current partition
    int n_bound = 0;  // height of the column left of the stretch (maxr bound for j = 1)
};

/// Certificate step: builds partition d-1 from partition d.
struct GrowthStep {
    int d = 0;
    int maxr_next = 0;  // maxr_{d-1}
    int delta = 0;      // maxr_{d-1} - height of the truncated partition
    int cb_prime = 0;   // extra contributing boxes appended to the first row
    std::vector<StretchPlan> stretches;
};

struct GrowthCertificate {
    int rank = 0;
    int acon_n = 0;
    std::vector<GrowthStep> steps;      // d = n, n-1, ..., 2
    std::vector<int> last_acons;        // above contributions of the last partition processed
};

struct GrowthRejection {
    int partition = 0;       // 1-based index of the offending partition
    std::string constraint;  // short name of the violated constraint
    std::string detail;
};

struct GrowthResult {
    std::optional<GrowthCertificate> certificate;
    std::optional<GrowthRejection> rejection;
    bool valid() const { return certificate.has_value(); }
};

/// Decides membership of an arbitrary tuple of rigged partitions by the
/// growth algorithm: the last partition is a single row with rigging
/// -|row| + acon, and each earlier partition is reachable by adding at
/// most two box rows beneath each stretch with deterministic
/// ncb/cb1/cb2/acon bookkeeping.  Rejections carry the first failed
/// constraint with indices.
GrowthResult validate(const RiggedConfiguration& rc);

/// Validates a suffix lambda_n, lambda_{n-1}, ..., lambda_{n-i} only
/// (suffix[0] is the last partition).
GrowthResult validate_suffix(const std::vector<RiggedPartition>& suffix, int rank);

/// Shape-only constraints between adjacent partitions: containment of the
/// truncation, the two-box column bound, the row-count bound and the
/// single-box rule beyond the first row.  Riggings are ignored here.
struct ConstraintReport {
    bool ok = true;
    std::string constraint;
    std::string detail;
};
ConstraintReport check_constraints(const RiggedPartition& prev, const RiggedPartition& next,
                                   int m, int rank);

/// All legal next partitions for a validated suffix, adding at most
/// `budget` boxes beyond the truncation; deduplicated and sorted.
std::vector<RiggedPartition> enumerate_next(const std::vector<RiggedPartition>& suffix,
                                            int rank, int budget);

}  // namespace crystalrig
