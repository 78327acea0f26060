#pragma once

#include <vector>

#include "crystalrig/tableau.hpp"

namespace crystalrig {

/// The consecutive run (head, head+1, ..., tail).
struct LowerSubinterval {
    int head = 0;
    int tail = 0;

    int length() const { return tail - head + 1; }
    bool contains(int letter) const { return head <= letter && letter <= tail; }
    bool operator==(const LowerSubinterval&) const = default;
};

/// Cascading n-sequence: a concatenation of an n-component, an
/// (n-1)-component, ... where each m-component lists m-tailed runs by
/// nonincreasing length.  Construction validates both orderings and
/// reports the first violating adjacent pair.
class CascadingSequence {
public:
    explicit CascadingSequence(int rank);
    CascadingSequence(int rank, std::vector<LowerSubinterval> subintervals);

    int rank() const { return rank_; }
    const std::vector<LowerSubinterval>& subintervals() const { return subintervals_; }
    bool empty() const { return subintervals_.empty(); }
    int size() const { return static_cast<int>(subintervals_.size()); }

    std::vector<int> letters() const;  // flat integer view
    int total_letters() const;
    int letter_count(int a) const;

    bool operator==(const CascadingSequence&) const = default;

    /// Parses a flat letter string by cutting maximal ascending-by-one runs
    /// (the only decomposition that can satisfy the component orderings).
    static CascadingSequence parse_flat(int rank, const std::vector<int>& letters);

private:
    int rank_ = 0;
    std::vector<LowerSubinterval> subintervals_;
};

/// The canonical f-string of a tableau: the m-component holds x_{i,m}
/// copies of (i,...,m) where x_{i,m} counts the (m+1)-boxes in row i.
CascadingSequence phi(const MarginallyLargeTableau& t);

/// Inverse map: each run [i,m] contributes one (m+1)-box to row i, and the
/// mandatory i-boxes are forced by marginal largeness.
MarginallyLargeTableau phi_inverse(const CascadingSequence& seq);

}  // namespace crystalrig
