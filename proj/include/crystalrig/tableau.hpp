#pragma once

#include <optional>
#include <vector>

#include "crystalrig/common.hpp"

namespace crystalrig {

/// Marginally large tableau of rank n over the alphabet {1..n+1}.
///
/// Rows are stored top to bottom (row 0 the longest).  Row i (1-based)
/// starts with an i-box, entries weakly increase along rows and strictly
/// increase down columns, and the number of i-boxes in row i exceeds the
/// total size of row i+1 by exactly one (row n+1 counting as empty, so the
/// last row carries a single n-box).
class MarginallyLargeTableau {
public:
    MarginallyLargeTableau(int rank, std::vector<std::vector<int>> rows);

    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int box_count() const;

    bool operator==(const MarginallyLargeTableau&) const = default;

private:
    int rank_ = 0;
    std::vector<std::vector<int>> rows_;
};

/// The unique tableau with no boxes beyond the mandatory i-boxes.
MarginallyLargeTableau highest_weight(int rank);

/// Kashiwara lowering operator f_i.  Acts by the signature rule on the
/// reading word and, when largeness fails, inserts the height-i repair
/// column left of the changed box.  Never annihilates.
MarginallyLargeTableau apply_f(const MarginallyLargeTableau& t, int i);

/// Kashiwara raising operator e_i; nullopt when the action gives zero.
/// Removes the repair column when the raw action leaves the large shape.
std::optional<MarginallyLargeTableau> apply_e(const MarginallyLargeTableau& t, int i);

/// Weight relative to the highest-weight element: coefficient a is minus
/// the number of f_a steps in any f-string reaching t.
Weight weight(const MarginallyLargeTableau& t);

/// Unpaired '+' / '-' counts in the signature word for letter i
/// (phi_i and epsilon_i of the tableau).
int signature_plus(const MarginallyLargeTableau& t, int i);
int signature_minus(const MarginallyLargeTableau& t, int i);

}  // namespace crystalrig
