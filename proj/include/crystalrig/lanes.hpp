#pragma once

#include <vector>

#include "crystalrig/cascading.hpp"

namespace crystalrig {

/// Reference to one entry of a cascading sequence.
struct LaneEntry {
    int subinterval = 0;  // index into seq.subintervals()
    int position = 0;     // offset within that subinterval
    bool operator==(const LaneEntry&) const = default;
};

struct Lane {
    std::vector<LaneEntry> entries;
    int length() const { return static_cast<int>(entries.size()); }
};

/// Partition of a sequence's entries into per-letter lanes; lane i of
/// letter l mirrors column i of the l-th rigged partition.
class LaneDecomposition {
public:
    explicit LaneDecomposition(int rank) : rank_(rank), by_letter_(rank) {}

    int rank() const { return rank_; }
    int lane_count(int letter) const;
    const Lane& lane(int letter, int number) const;  // number is 1-based
    int lane_length(int letter, int number) const;   // 0 when absent
    std::vector<int> lane_lengths(int letter) const;
    std::vector<Lane>& lanes_for(int letter) { return by_letter_[letter - 1]; }
    const std::vector<Lane>& lanes_for(int letter) const { return by_letter_[letter - 1]; }

private:
    int rank_ = 0;
    std::vector<std::vector<Lane>> by_letter_;
};

/// The iterative lane-forming procedure.  The head of each subinterval
/// opens a new lane for its letter; entry k then lands in lane d_k+1 for
/// the maximal d_k <= d_{k-1} whose lane is strictly longer than the next.
LaneDecomposition form_lanes(const CascadingSequence& seq);

bool ends_at_right_endpoint(const CascadingSequence& seq, const Lane& lane);

struct LanePosition {
    int lane_number = 0;  // 1-based
    int depth = 0;        // 1-based
};

/// Lane number and depth of one entry.
LanePosition locate_entry(const CascadingSequence& seq, const LaneDecomposition& dec,
                          int subinterval, int position);

/// |V^l_r|: number of letter-l lanes with index <= max_lane whose last
/// entry is the tail of its subinterval.
int right_endpoint_count(const CascadingSequence& seq, const LaneDecomposition& dec,
                         int letter, int max_lane);

/// |W_b^l|: number of letter-l lanes of length exactly b.
int lane_count_of_length(const LaneDecomposition& dec, int letter, int b);

/// Debug rendering with superscript-style lane marks, one run per group:
/// "(7^1,8^1,9^1)(8^2,9^2)".
std::string dump_lanes(const CascadingSequence& seq, const LaneDecomposition& dec);

}  // namespace crystalrig
