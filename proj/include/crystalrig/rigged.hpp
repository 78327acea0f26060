#pragma once

#include <optional>
#include <vector>

#include "crystalrig/common.hpp"

namespace crystalrig {

/// One string of a rigged partition: a row length with its label.
struct RiggedString {
    int length = 0;
    int rigging = 0;
    bool operator==(const RiggedString&) const = default;
    bool operator<(const RiggedString& o) const {
        return length != o.length ? length < o.length : rigging < o.rigging;
    }
};

/// Multiset of strings kept in decreasing lexicographic order.
struct RiggedPartition {
    std::vector<RiggedString> strings;

    RiggedPartition() = default;
    explicit RiggedPartition(std::vector<RiggedString> s);

    bool empty() const { return strings.empty(); }
    int row_count() const { return static_cast<int>(strings.size()); }
    int box_count() const;
    std::vector<int> row_lengths() const;  // nonincreasing

    bool operator==(const RiggedPartition&) const = default;
    bool operator<(const RiggedPartition& o) const { return strings < o.strings; }
};

/// Tuple of n rigged partitions.  Vacancy numbers are always derived.
struct RiggedConfiguration {
    int rank = 0;
    std::vector<RiggedPartition> partitions;

    RiggedConfiguration() = default;
    RiggedConfiguration(int rank, std::vector<RiggedPartition> partitions);

    const RiggedPartition& partition(int a) const { return partitions[a - 1]; }
    bool operator==(const RiggedConfiguration&) const = default;
    bool operator<(const RiggedConfiguration& o) const { return partitions < o.partitions; }
};

RiggedConfiguration empty_rc(int rank);

/// p_i^{(a)} = -sum_{b,j} A_{ab} min(i,j) m_j^{(b)} with the type-A Cartan
/// matrix (A_{aa} = 2, A_{a,a+-1} = -1).
int vacancy(const RiggedConfiguration& rc, int a, int i);

/// Kashiwara lowering operator: adds (1,-1) when the smallest label is
/// positive or the part is empty, otherwise lengthens the longest string
/// with the smallest label; all other colabels are preserved.
RiggedConfiguration apply_f(const RiggedConfiguration& rc, int a);

/// Kashiwara raising operator; nullopt when the smallest label is >= 0 or
/// the part is empty.  Shrinks the shortest string with the smallest
/// label, deleting it at length zero; all other colabels are preserved.
std::optional<RiggedConfiguration> apply_e(const RiggedConfiguration& rc, int a);

struct CrystalStats {
    Weight weight;             // coefficient a = -|nu^(a)|
    std::vector<int> epsilon;  // by repeated raising
    std::vector<int> phi;      // epsilon_a + <h_a, wt>
};

CrystalStats stats(const RiggedConfiguration& rc);

}  // namespace crystalrig
