#include "crystalrig/growth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace crystalrig {

namespace {

// Column height of a partition shape (row lengths, nonincreasing) at
// column c >= 1.
int col_height(const std::vector<int>& shape, int c) {
    int h = 0;
    for (int len : shape)
        if (len >= c) ++h;
    return h;
}

struct BarStretch {
    int length = 0;  // |s^{b_j}|
    int height = 0;  // column height inside the truncated partition
    int y = 0;       // columns strictly to the left
};

// Stretches of the truncated partition, left to right, following the
// invisible-stretch convention: they copy the stretches of the partition
// itself, the top one dropping to height zero above the first row.
std::vector<BarStretch> bar_stretches(const std::vector<int>& shape) {
    std::vector<BarStretch> out;
    if (shape.empty()) return out;
    std::vector<int> distinct;  // ascending
    for (int i = static_cast<int>(shape.size()) - 1; i >= 0; --i)
        if (distinct.empty() || shape[i] != distinct.back()) distinct.push_back(shape[i]);
    int prev = 0;
    for (int len : distinct) {
        int rows_ge = col_height(shape, len);
        out.push_back({len - prev, rows_ge - 1, prev});
        prev = len;
    }
    return out;
}

struct AconRecovery {
    std::vector<int> acons;          // per distinct row length, ascending
    std::vector<int> stretch_ends;   // the distinct row lengths, ascending
};

// Telescopes riggings bottom-up: acon of a stretch is the rigging step
// plus the contributing boxes exposed in it, and must lie in
// [0, stretch length].  With upsilon_zero the bottom stretch admits no
// above contribution at all.
bool recover_acons(const RiggedPartition& part, const std::vector<bool>& contrib_col,
                   bool upsilon_zero, int index, AconRecovery* out, GrowthRejection* rej) {
    out->acons.clear();
    out->stretch_ends.clear();
    std::map<int, int> rig_by_length;
    for (const RiggedString& s : part.strings) {
        auto it = rig_by_length.find(s.length);
        if (it == rig_by_length.end()) {
            rig_by_length[s.length] = s.rigging;
        } else if (it->second != s.rigging) {
            *rej = {index, "equal-length riggings",
                    "rows of length " + std::to_string(s.length) + " carry different riggings"};
            return false;
        }
    }
    int prev_len = 0;
    int prev_rig = 0;
    for (const auto& [len, rig] : rig_by_length) {
        int cb = 0;
        for (int c = prev_len + 1; c <= len; ++c)
            if (c <= static_cast<int>(contrib_col.size()) && contrib_col[c - 1]) ++cb;
        int acon = rig - prev_rig + cb;
        int bound = len - prev_len;
        if (upsilon_zero && prev_len == 0) bound = 0;
        if (acon < 0 || acon > bound) {
            *rej = {index, "acon range",
                    "above contribution " + std::to_string(acon) + " for the row of length " +
                        std::to_string(len) + " is outside [0," + std::to_string(bound) + "]"};
            return false;
        }
        out->acons.push_back(acon);
        out->stretch_ends.push_back(len);
        prev_len = len;
        prev_rig = rig;
    }
    return true;
}

// Places the boxes of one growth step and fills the certificate entry.
// `contrib_next` receives one flag per column of the next partition,
// marking columns whose deepest box is contributing.
bool plan_step(const RiggedPartition& lambda_d, const std::vector<int>& acons_d, int d,
               const RiggedPartition& lambda_next, int rank, GrowthStep* step,
               std::vector<bool>* contrib_next, GrowthRejection* rej) {
    std::vector<int> shape_d = lambda_d.row_lengths();
    std::vector<int> shape_next = lambda_next.row_lengths();
    int top_d = shape_d.empty() ? 0 : shape_d[0];
    int top_next = shape_next.empty() ? 0 : shape_next[0];

    step->d = d;
    step->maxr_next = maxr(d - 1, rank);
    step->stretches.clear();

    std::vector<int> bar = shape_d;
    if (!bar.empty()) bar.erase(bar.begin());
    step->delta = step->maxr_next - (bar.empty() ? 0 : col_height(bar, 1));

    if (lambda_next.row_count() > step->maxr_next) {
        *rej = {d - 1, "max rows",
                "partition " + std::to_string(d - 1) + " has " + std::to_string(lambda_next.row_count()) +
                    " rows, limit " + std::to_string(step->maxr_next)};
        return false;
    }
    for (int c = 1; c <= top_d; ++c) {
        int added = col_height(shape_next, c) - col_height(bar, c);
        if (added < 0) {
            *rej = {d - 1, "containment", "column " + std::to_string(c) + " lost boxes of the truncation"};
            return false;
        }
        if (added > 2) {
            *rej = {d - 1, "two-box column", "column " + std::to_string(c) + " gained more than two boxes"};
            return false;
        }
    }
    for (int c = top_d + 1; c <= top_next; ++c)
        if (col_height(shape_next, c) > 1) {
            *rej = {d - 1, "beyond first row",
                    "column " + std::to_string(c) + " beyond the previous first row gained two boxes"};
            return false;
        }

    contrib_next->assign(std::max(top_next, 0), false);
    auto stretches = bar_stretches(shape_d);
    for (std::size_t j = 0; j < stretches.size(); ++j) {
        const BarStretch& s = stretches[j];
        StretchPlan plan;
        plan.length = s.length;
        plan.height = s.height;
        plan.y = s.y;
        plan.acon = acons_d[j];
        for (int c = s.y + 1; c <= s.y + s.length; ++c) {
            int h = col_height(shape_next, c);
            if (h >= s.height + 1) ++plan.eta1;
            if (h >= s.height + 2) ++plan.eta2;
        }
        plan.cb2 = plan.eta2;
        plan.cb1 = plan.acon - plan.cb2;
        if (plan.cb1 < 0) {
            *rej = {d - 1, "cb range",
                    "second row beneath stretch " + std::to_string(j + 1) + " exceeds the above contribution"};
            return false;
        }
        plan.ncb = plan.eta1 - plan.cb1;
        if (plan.ncb < 0) {
            *rej = {d - 1, "cb range",
                    "contributing boxes beneath stretch " + std::to_string(j + 1) + " exceed its first row"};
            return false;
        }
        if (plan.cb2 > plan.ncb) {
            *rej = {d - 1, "cb range",
                    "second row beneath stretch " + std::to_string(j + 1) +
                        " is longer than the noncontributing prefix"};
            return false;
        }
        plan.n_bound = j == 0 ? step->maxr_next : col_height(shape_next, s.y);
        // contributing boxes: the second row and the first-row tail
        for (int c = s.y + 1; c <= s.y + plan.cb2; ++c) (*contrib_next)[c - 1] = true;
        for (int c = s.y + plan.ncb + 1; c <= s.y + plan.ncb + plan.cb1; ++c) (*contrib_next)[c - 1] = true;
        step->stretches.push_back(plan);
    }
    step->cb_prime = std::max(0, top_next - top_d);
    for (int c = top_d + 1; c <= top_next; ++c) (*contrib_next)[c - 1] = true;
    return true;
}

GrowthResult validate_core(const std::vector<RiggedPartition>& parts, int rank, bool full) {
    GrowthResult result;
    if (parts.empty() || static_cast<int>(parts.size()) > rank) {
        result.rejection = {0, "rank mismatch", "suffix longer than the rank"};
        return result;
    }
    GrowthCertificate cert;
    cert.rank = rank;
    GrowthRejection rej;

    const RiggedPartition& last = parts.front();  // lambda_n
    if (last.row_count() > 1) {
        result.rejection = {rank, "single row", "the last partition must be a single row"};
        return result;
    }
    std::vector<bool> contrib(last.empty() ? 0 : last.strings[0].length, true);
    AconRecovery acons;
    if (!recover_acons(last, contrib, false, rank, &acons, &rej)) {
        result.rejection = rej;
        return result;
    }
    cert.acon_n = acons.acons.empty() ? 0 : acons.acons[0];

    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        int d = rank - static_cast<int>(i);
        GrowthStep step;
        std::vector<bool> contrib_next;
        if (!plan_step(parts[i], acons.acons, d, parts[i + 1], rank, &step, &contrib_next, &rej)) {
            result.rejection = rej;
            return result;
        }
        if (!recover_acons(parts[i + 1], contrib_next, step.delta == 0, d - 1, &acons, &rej)) {
            result.rejection = rej;
            return result;
        }
        cert.steps.push_back(std::move(step));
    }
    if (full) {
        for (int a : acons.acons)
            if (a != 0) {
                result.rejection = {1, "first partition acon",
                                    "partition 1 admits no above contribution"};
                return result;
            }
    }
    cert.last_acons = acons.acons;
    result.certificate = std::move(cert);
    return result;
}

}  // namespace

int maxr(int l, int rank) {
    if (l < 1 || l > rank) throw std::invalid_argument("partition index out of range");
    return std::min(rank - l + 1, l);
}

GrowthResult validate(const RiggedConfiguration& rc) {
    std::vector<RiggedPartition> suffix(rc.partitions.rbegin(), rc.partitions.rend());
    return validate_core(suffix, rc.rank, true);
}

GrowthResult validate_suffix(const std::vector<RiggedPartition>& suffix, int rank) {
    return validate_core(suffix, rank, static_cast<int>(suffix.size()) == rank);
}

ConstraintReport check_constraints(const RiggedPartition& prev, const RiggedPartition& next,
                                   int m, int rank) {
    ConstraintReport report;
    auto fail = [&](const std::string& name, const std::string& detail) {
        report.ok = false;
        report.constraint = name;
        report.detail = detail;
        return report;
    };
    if (m < 2 || m > rank) return fail("rank mismatch", "index m must lie in [2, rank]");
    std::vector<int> shape_prev = prev.row_lengths();
    std::vector<int> shape_next = next.row_lengths();
    std::vector<int> bar = shape_prev;
    if (!bar.empty()) bar.erase(bar.begin());
    int top_prev = shape_prev.empty() ? 0 : shape_prev[0];
    int top_next = shape_next.empty() ? 0 : shape_next[0];
    if (next.row_count() > maxr(m - 1, rank))
        return fail("max rows", "row count exceeds " + std::to_string(maxr(m - 1, rank)));
    for (int c = 1; c <= top_prev; ++c) {
        int added = col_height(shape_next, c) - col_height(bar, c);
        if (added < 0) return fail("containment", "column " + std::to_string(c) + " lost boxes");
        if (added > 2) return fail("two-box column", "column " + std::to_string(c) + " gained three boxes");
    }
    for (int c = top_prev + 1; c <= top_next; ++c)
        if (col_height(shape_next, c) > 1)
            return fail("beyond first row", "column " + std::to_string(c) + " gained two boxes");
    return report;
}

std::vector<RiggedPartition> enumerate_next(const std::vector<RiggedPartition>& suffix,
                                            int rank, int budget) {
    if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
    GrowthResult checked = validate_suffix(suffix, rank);
    if (!checked.valid())
        throw std::invalid_argument("invalid suffix: " + checked.rejection->constraint +
                                    " (" + checked.rejection->detail + ")");
    int d = rank - static_cast<int>(suffix.size()) + 1;
    if (d < 2) throw std::invalid_argument("suffix already reaches the first partition");

    const RiggedPartition& lambda_d = suffix.back();
    const std::vector<int> acons = checked.certificate->last_acons;
    std::vector<int> shape_d = lambda_d.row_lengths();
    auto stretches = bar_stretches(shape_d);
    std::vector<int> bar = shape_d;
    if (!bar.empty()) bar.erase(bar.begin());
    int bar_height = bar.empty() ? 0 : col_height(bar, 1);
    int limit = maxr(d - 1, rank);
    int delta = limit - bar_height;
    bool top_visible = shape_d.size() >= 2 && shape_d[0] == shape_d[1];

    std::set<RiggedPartition> results;

    // columns: heights of the candidate partition, left to right;
    // contrib: deepest-box flags per column.
    std::vector<int> columns;
    std::vector<bool> contrib;
    for (const BarStretch& s : stretches)
        for (int c = 0; c < s.length; ++c) {
            columns.push_back(s.height);
            contrib.push_back(false);
        }

    auto emit_with_riggings = [&](const std::vector<int>& cols, const std::vector<bool>& marks) {
        // rows from the column profile
        std::vector<int> row_lengths;
        int height = cols.empty() ? 0 : cols[0];
        for (int v = 1; v <= height; ++v) {
            int len = 0;
            while (len < static_cast<int>(cols.size()) && cols[len] >= v) ++len;
            row_lengths.push_back(len);
        }
        // distinct lengths ascending with contributing counts
        std::vector<int> ends, cbs, mult;
        for (int i = static_cast<int>(row_lengths.size()) - 1; i >= 0; --i) {
            if (!ends.empty() && row_lengths[i] == ends.back()) {
                ++mult.back();
                continue;
            }
            int prev = ends.empty() ? 0 : ends.back();
            int cb = 0;
            for (int c = prev + 1; c <= row_lengths[i]; ++c)
                if (marks[c - 1]) ++cb;
            ends.push_back(row_lengths[i]);
            cbs.push_back(cb);
            mult.push_back(1);
        }
        // enumerate acon choices per stretch and telescope riggings
        std::vector<int> rig(ends.size(), 0);
        auto rec = [&](auto&& self, std::size_t m, int prev_rig) -> void {
            if (m == ends.size()) {
                std::vector<RiggedString> strings;
                for (std::size_t k = 0; k < ends.size(); ++k)
                    for (int count = 0; count < mult[k]; ++count) strings.push_back({ends[k], rig[k]});
                results.insert(RiggedPartition(std::move(strings)));
                return;
            }
            int prev_len = m == 0 ? 0 : ends[m - 1];
            int bound = ends[m] - prev_len;
            if (m == 0 && delta == 0) bound = 0;
            for (int acon = 0; acon <= bound; ++acon) {
                rig[m] = prev_rig - cbs[m] + acon;
                self(self, m + 1, rig[m]);
            }
        };
        rec(rec, 0, 0);
    };

    auto place_cb_prime = [&](int used) {
        bool allowed = stretches.empty() || top_visible ||
                       (!columns.empty() && columns.back() >= stretches.back().height + 1);
        int max_prime = allowed ? budget - used : 0;
        for (int cbp = 0; cbp <= max_prime; ++cbp) {
            std::vector<int> cols = columns;
            std::vector<bool> marks = contrib;
            for (int c = 0; c < cbp; ++c) {
                cols.push_back(1);
                marks.push_back(true);
            }
            emit_with_riggings(cols, marks);
        }
    };

    auto place = [&](auto&& self, std::size_t j, int used) -> void {
        if (j == stretches.size()) {
            place_cb_prime(used);
            return;
        }
        const BarStretch& s = stretches[j];
        int left_height = j == 0 ? limit : columns[s.y - 1];
        int cap = std::min(left_height - s.height, 2);
        for (int eta1 = 0; eta1 <= s.length; ++eta1) {
            if (used + eta1 > budget) break;
            for (int eta2 = 0; eta2 <= eta1; ++eta2) {
                if (used + eta1 + eta2 > budget) break;
                int rows_added = (eta1 > 0 ? 1 : 0) + (eta2 > 0 ? 1 : 0);
                if (rows_added > cap) continue;
                int cb2 = eta2;
                int cb1 = acons[j] - cb2;
                if (cb1 < 0) continue;
                int ncb = eta1 - cb1;
                if (ncb < 0 || cb2 > ncb) continue;
                for (int c = 0; c < s.length; ++c) {
                    int a = c < eta2 ? 2 : (c < eta1 ? 1 : 0);
                    columns[s.y + c] = s.height + a;
                    contrib[s.y + c] = (c < cb2) || (c >= ncb && c < ncb + cb1);
                }
                self(self, j + 1, used + eta1 + eta2);
            }
        }
        for (int c = 0; c < s.length; ++c) {
            columns[s.y + c] = s.height;
            contrib[s.y + c] = false;
        }
    };

    // Each stretch must land a full acon even when no boxes fit the
    // budget, so an over-constrained suffix can produce nothing.
    place(place, 0, 0);
    return std::vector<RiggedPartition>(results.begin(), results.end());
}

}  // namespace crystalrig
