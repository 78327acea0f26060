#pragma once

#include <optional>
#include <vector>

#include "crystalrig/growth.hpp"
#include "crystalrig/lanes.hpp"
#include "crystalrig/rigged.hpp"

namespace crystalrig {

/// Closed-form rigged configuration of a cascading sequence: partition l
/// has column i of height |L_i(l)|, and a row of length r carries rigging
/// -|V^l_r| + |V^{l-1}_r| over the right-endpoint lane counts.  Equals the
/// operator fold over the sequence, exactly.
RiggedConfiguration rc_from_lanes(const CascadingSequence& seq);

/// (p,q,r)-plateau conditions on the lane decomposition; q or r absent
/// means unbounded.  A starred kind requires the plain plateau condition
/// for every letter in [2, p].
struct PlateauKind {
    int p = 0;
    std::optional<int> q;  // nullopt = unbounded
    std::optional<int> r;  // nullopt = unbounded
    bool star = false;
};

bool is_plateau(const CascadingSequence& seq, const PlateauKind& kind);

/// Adds `count` noncontributing boxes beneath the height-h stretch of
/// partition p-1: pairs and fixes runs level by level (nearest unmatched
/// element to the left), then lengthens the first `count` survivors with
/// heads p-h .. p.  Requires a (p-1)*-plateau that is also a
/// (p,h+1,h+1)-plateau.
CascadingSequence add_noncontributing(const CascadingSequence& seq, int p, int stretch_height,
                                      int count);

/// Adds `count` contributing boxes beneath the height-h stretch of
/// partition p-1 by appending copies of (p-h-1,...,p-1); with top_row set,
/// appends singleton runs (p-1) instead (any count).  Requires a
/// (p-1)*-plateau, and without top_row a (p,0,h+1)-plateau.
CascadingSequence add_contributing(const CascadingSequence& seq, int p, int stretch_height,
                                   int count, bool top_row = false);

/// Cascading sequence of a valid rigged configuration: |lambda_n| singleton
/// runs (n), then per stretch the noncontributing row, the second
/// contributing row and the first-row contributing tail, then the
/// first-row padding, partition by partition.  Throws on growth-invalid
/// input; the result satisfies rc_from_lanes(result) == rc exactly.
CascadingSequence seq_from_rc(const RiggedConfiguration& rc);

/// Per-box classification: box (column i, depth v) of partition l is
/// contributing exactly when lane entry v of L_i(l) is a subinterval tail.
struct BoxAnnotation {
    // contributing[l-1][i][v]: letter l, 0-based lane index i, 0-based depth v
    std::vector<std::vector<std::vector<bool>>> contributing;
};

BoxAnnotation annotate_boxes(const CascadingSequence& seq);

namespace detail {
// Procedure bodies without the plateau prechecks; used when composing the
// procedures through intermediate states whose conservative (p,q,r)
// bookkeeping lapses.  Outputs are still validated as cascading sequences.
CascadingSequence add_noncontributing_unchecked(const CascadingSequence& seq, int p,
                                                int stretch_height, int count);
CascadingSequence add_contributing_unchecked(const CascadingSequence& seq, int p,
                                             int stretch_height, int count, bool top_row);
}  // namespace detail

}  // namespace crystalrig
