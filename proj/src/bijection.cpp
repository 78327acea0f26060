#include "crystalrig/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crystalrig {

namespace {

bool plateau_one(const CascadingSequence& seq, const LaneDecomposition& dec, int p,
                 std::optional<int> q, std::optional<int> r) {
    // 1: letter-(p-1) lanes track the letter-p lanes one box behind,
    //    wherever they are still shorter than q.
    for (int i = 1; i <= dec.lane_count(p); ++i) {
        int below = dec.lane_length(p - 1, i);
        bool constrained = !q.has_value() || below < *q;
        if (constrained && below != dec.lane_length(p, i) - 1) return false;
    }
    // 2: short letter-(p-1) lanes must not end at right endpoints.
    for (int i = 1; i <= dec.lane_count(p - 1); ++i) {
        const Lane& lane = dec.lane(p - 1, i);
        bool constrained = !r.has_value() || lane.length() <= *r;
        if (constrained && ends_at_right_endpoint(seq, lane)) return false;
    }
    // 3: no lower letter ends at a right endpoint at all.
    for (int k = 1; k < p - 1; ++k)
        for (int i = 1; i <= dec.lane_count(k); ++i)
            if (ends_at_right_endpoint(seq, dec.lane(k, i))) return false;
    return true;
}

int stretch_capacity(const LaneDecomposition& dec, int p, int height) {
    return lane_count_of_length(dec, p, height + 1);
}

}  // namespace

RiggedConfiguration rc_from_lanes(const CascadingSequence& seq) {
    LaneDecomposition dec = form_lanes(seq);
    int n = seq.rank();
    std::vector<RiggedPartition> parts;
    parts.reserve(n);
    for (int l = 1; l <= n; ++l) {
        std::vector<int> columns = dec.lane_lengths(l);
        std::vector<RiggedString> strings;
        int height = columns.empty() ? 0 : columns[0];
        for (int v = 1; v <= height; ++v) {
            int len = 0;
            while (len < static_cast<int>(columns.size()) && columns[len] >= v) ++len;
            int rigging = -right_endpoint_count(seq, dec, l, len) +
                          right_endpoint_count(seq, dec, l - 1, len);
            strings.push_back({len, rigging});
        }
        parts.push_back(RiggedPartition(std::move(strings)));
    }
    return RiggedConfiguration(n, std::move(parts));
}

bool is_plateau(const CascadingSequence& seq, const PlateauKind& kind) {
    LaneDecomposition dec = form_lanes(seq);
    if (kind.star) {
        if (kind.p < 2) throw std::invalid_argument("starred plateaus need p >= 2");
        for (int m = 2; m <= kind.p; ++m)
            if (!plateau_one(seq, dec, m, std::nullopt, std::nullopt)) return false;
        return true;
    }
    return plateau_one(seq, dec, kind.p, kind.q, kind.r);
}

namespace detail {

CascadingSequence add_noncontributing_unchecked(const CascadingSequence& seq, int p,
                                                int stretch_height, int count) {
    const int h = stretch_height;
    if (count == 0) return seq;
    auto ivs = seq.subintervals();
    const int total = static_cast<int>(ivs.size());
    std::vector<char> deleted(total, 0);

    // Anchors: every run headed p-h-1.  Level by level upward, each anchor
    // fixes the nearest surviving run of the next head to its left; anchors
    // with no partner simply stop their chain.
    std::vector<int> anchor;
    for (int j = 0; j < total; ++j)
        if (ivs[j].head == p - h - 1) anchor.push_back(j);
    for (int c = 0; c <= h; ++c) {
        int v = p - h + c;
        for (int& a : anchor) {
            if (a < 0) continue;
            int found = -1;
            for (int j = a - 1; j >= 0; --j)
                if (!deleted[j] && ivs[j].head == v) {
                    found = j;
                    break;
                }
            if (found >= 0) deleted[found] = 1;
            a = found;
        }
    }

    // Lengthen the first `count` survivors of each level, collected before
    // any head moves.
    std::vector<int> to_lengthen;
    for (int c = 0; c <= h; ++c) {
        int v = p - h + c;
        int taken = 0;
        for (int j = 0; j < total && taken < count; ++j)
            if (!deleted[j] && ivs[j].head == v) {
                to_lengthen.push_back(j);
                ++taken;
            }
        if (taken < count)
            throw std::logic_error("not enough head-" + std::to_string(v) + " runs to lengthen");
    }
    for (int j : to_lengthen) --ivs[j].head;
    return CascadingSequence(seq.rank(), std::move(ivs));
}

CascadingSequence add_contributing_unchecked(const CascadingSequence& seq, int p,
                                             int stretch_height, int count, bool top_row) {
    if (count == 0) return seq;
    auto ivs = seq.subintervals();
    LowerSubinterval run = top_row ? LowerSubinterval{p - 1, p - 1}
                                   : LowerSubinterval{p - stretch_height - 1, p - 1};
    for (int c = 0; c < count; ++c) ivs.push_back(run);
    return CascadingSequence(seq.rank(), std::move(ivs));
}

}  // namespace detail

CascadingSequence add_noncontributing(const CascadingSequence& seq, int p, int stretch_height,
                                      int count) {
    if (p < 2 || p > seq.rank()) throw std::invalid_argument("letter p out of range");
    if (stretch_height < 0 || p - stretch_height - 1 < 1)
        throw std::invalid_argument("stretch height out of range for letter p");
    if (count < 0) throw std::invalid_argument("count must be nonnegative");
    LaneDecomposition dec = form_lanes(seq);
    if (count > stretch_capacity(dec, p, stretch_height))
        throw std::invalid_argument("count exceeds the stretch length");
    if (p >= 3 && !is_plateau(seq, {p - 1, std::nullopt, std::nullopt, true}))
        throw std::invalid_argument("sequence is not a starred plateau below p");
    if (!is_plateau(seq, {p, stretch_height + 1, stretch_height + 1, false}))
        throw std::invalid_argument("sequence is not a plateau at p for this stretch");
    return detail::add_noncontributing_unchecked(seq, p, stretch_height, count);
}

CascadingSequence add_contributing(const CascadingSequence& seq, int p, int stretch_height,
                                   int count, bool top_row) {
    if (p < 2 || p > seq.rank() + 1) throw std::invalid_argument("letter p out of range");
    if (count < 0) throw std::invalid_argument("count must be nonnegative");
    if (p >= 3 && !is_plateau(seq, {p - 1, std::nullopt, std::nullopt, true}))
        throw std::invalid_argument("sequence is not a starred plateau below p");
    if (!top_row) {
        if (stretch_height < 0 || p - stretch_height - 1 < 1)
            throw std::invalid_argument("stretch height out of range for letter p");
        LaneDecomposition dec = form_lanes(seq);
        if (count > stretch_capacity(dec, p, stretch_height))
            throw std::invalid_argument("count exceeds the stretch length");
        if (!is_plateau(seq, {p, 0, stretch_height + 1, false}))
            throw std::invalid_argument("sequence is not a plateau at p for this stretch");
    }
    return detail::add_contributing_unchecked(seq, p, stretch_height, count, top_row);
}

CascadingSequence seq_from_rc(const RiggedConfiguration& rc) {
    GrowthResult res = validate(rc);
    if (!res.valid())
        throw std::invalid_argument("not a valid rigged configuration: " +
                                    res.rejection->constraint + " (" + res.rejection->detail + ")");
    const GrowthCertificate& cert = *res.certificate;
    int n = rc.rank;
    CascadingSequence beta(n);
    beta = detail::add_contributing_unchecked(beta, n + 1, 0,
                                              rc.partitions[n - 1].box_count(), true);
    for (const GrowthStep& step : cert.steps) {
        int d = step.d;
        for (const StretchPlan& plan : step.stretches) {
            if (plan.ncb > 0)
                beta = detail::add_noncontributing_unchecked(beta, d, plan.height, plan.ncb);
            if (plan.cb2 > 0)
                beta = detail::add_contributing_unchecked(beta, d, plan.height + 1, plan.cb2, false);
            if (plan.cb1 > 0)
                beta = detail::add_contributing_unchecked(beta, d, plan.height, plan.cb1, false);
        }
        if (step.cb_prime > 0)
            beta = detail::add_contributing_unchecked(beta, d, 0, step.cb_prime, true);
    }
    if (!(rc_from_lanes(beta) == rc))
        throw std::logic_error("extracted sequence does not reproduce the configuration");
    return beta;
}

BoxAnnotation annotate_boxes(const CascadingSequence& seq) {
    LaneDecomposition dec = form_lanes(seq);
    BoxAnnotation ann;
    ann.contributing.resize(seq.rank());
    for (int l = 1; l <= seq.rank(); ++l) {
        const auto& lanes = dec.lanes_for(l);
        ann.contributing[l - 1].resize(lanes.size());
        for (std::size_t i = 0; i < lanes.size(); ++i) {
            ann.contributing[l - 1][i].resize(lanes[i].entries.size());
            for (std::size_t v = 0; v < lanes[i].entries.size(); ++v) {
                const LaneEntry& e = lanes[i].entries[v];
                ann.contributing[l - 1][i][v] =
                    e.position == seq.subintervals()[e.subinterval].length() - 1;
            }
        }
    }
    return ann;
}

}  // namespace crystalrig
