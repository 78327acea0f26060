// Acceptance suite: runs every acceptance criterion exactly and prints one
// pass/fail line per criterion.  All comparisons are exact integer
// equalities.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crystalrig/bijection.hpp"
#include "crystalrig/document.hpp"
#include "crystalrig/growth.hpp"
#include "crystalrig/lanes.hpp"
#include "crystalrig/oracle.hpp"
#include "golden.hpp"
#include "test_util.hpp"

using namespace crystalrig;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& what, std::string& detail) {
    if (!ok && detail.empty()) detail = what;
    return ok;
}

RiggedConfiguration fold_sequence(const CascadingSequence& seq) {
    RiggedConfiguration rc = empty_rc(seq.rank());
    for (int a : seq.letters()) rc = apply_f(rc, a);
    return rc;
}

bool lane_assignment_matches(const CascadingSequence& seq,
                             const std::vector<std::vector<std::pair<int, int>>>& expected,
                             std::string& detail) {
    LaneDecomposition dec = form_lanes(seq);
    for (int b = 0; b < seq.size(); ++b)
        for (int k = 0; k < seq.subintervals()[b].length(); ++k) {
            LanePosition pos = locate_entry(seq, dec, b, k);
            if (pos.lane_number != expected[b][k].second) {
                std::ostringstream msg;
                msg << "lane mismatch at subinterval " << b + 1 << " entry "
                    << seq.subintervals()[b].head + k;
                detail = msg.str();
                return false;
            }
        }
    return true;
}

// ---- criterion 1: golden examples ---------------------------------------
bool criterion_golden(std::string& detail) {
    bool ok = true;
    ok &= expect(phi(golden::big_tableau()) == golden::big_sequence(), "phi of the rank-5 example",
                 detail);
    ok &= expect(phi_inverse(golden::big_sequence()) == golden::big_tableau(),
                 "phi inverse of the rank-5 example", detail);
    ok &= expect(apply_f(golden::s_tableau(), 2) == golden::f2_of_s(), "f2 example", detail);
    auto raised = apply_e(golden::s_tableau(), 3);
    ok &= expect(raised.has_value() && *raised == golden::e3_of_s(), "e3 example", detail);
    ok &= lane_assignment_matches(golden::lanes1_sequence(), golden::lanes1_assignment(), detail);
    ok &= lane_assignment_matches(golden::lanes2_sequence(), golden::lanes2_assignment(), detail);
    ok &= expect(rc_from_lanes(golden::lanes2_sequence()) == golden::lanes2_rc(),
                 "closed form on the second lane example", detail);
    for (auto [a, len, expected] : golden::lanes2_vacancies())
        ok &= expect(vacancy(golden::lanes2_rc(), a, len) == expected, "printed vacancy numbers",
                     detail);
    ok &= expect(seq_from_rc(golden::extraction1_rc()) == golden::extraction1_sequence(),
                 "first extraction example", detail);
    ok &= expect(seq_from_rc(golden::extraction2_rc()) == golden::extraction2_sequence(),
                 "second extraction example", detail);
    return ok;
}

// ---- criterion 2: closed form equals the operator fold -------------------
bool criterion_oracle_equivalence(std::string& detail) {
    bool ok = true;
    for (int n = 2; n <= 4 && ok; ++n) {
        testutil::for_each_cascading(n, 7, [&](const CascadingSequence& s) {
            if (!ok) return;
            ok = expect(rc_from_lanes(s) == fold_sequence(s), "exhaustive fold equivalence", detail);
        });
    }
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        CascadingSequence s = testutil::random_cascading(10, 40, rng);
        ok = expect(rc_from_lanes(s) == fold_sequence(s), "random fold equivalence", detail);
    }
    return ok;
}

// ---- criterion 3: bijection round trips ----------------------------------
bool criterion_round_trips(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 3 && ok; ++n) {
        TableauGraph tab = bfs_tableaux(n, 6);
        for (const MarginallyLargeTableau& t : tab.nodes) {
            ok &= expect(phi_inverse(phi(t)) == t, "tableau round trip", detail);
            if (!ok) break;
        }
        RcGraph rig = bfs_rigged(n, 6);
        for (const RiggedConfiguration& rc : rig.nodes) {
            ok &= expect(rc_from_lanes(seq_from_rc(rc)) == rc, "configuration round trip", detail);
            if (!ok) break;
        }
    }
    return ok;
}

// ---- criterion 4: growth soundness and completeness ----------------------
void partition_shapes(int max_boxes, std::vector<std::vector<int>>& out) {
    std::vector<int> shape;
    std::function<void(int, int)> rec = [&](int prev, int used) {
        out.push_back(shape);
        for (int len = 1; len <= prev && used + len <= max_boxes; ++len) {
            shape.push_back(len);
            rec(len, used + len);
            shape.pop_back();
        }
    };
    rec(max_boxes, 0);
}

bool criterion_growth(std::string& detail) {
    bool ok = true;
    for (int n = 2; n <= 3 && ok; ++n) {
        const int budget = 6;
        std::set<RiggedConfiguration> reached;
        {
            std::vector<RiggedConfiguration> frontier{empty_rc(n)};
            reached.insert(frontier[0]);
            for (int layer = 0; layer < budget; ++layer) {
                std::vector<RiggedConfiguration> next;
                for (const auto& rc : frontier)
                    for (int a = 1; a <= n; ++a) {
                        RiggedConfiguration child = apply_f(rc, a);
                        if (reached.insert(child).second) next.push_back(child);
                    }
                frontier = std::move(next);
            }
        }
        std::vector<std::vector<int>> shapes;
        partition_shapes(budget, shapes);

        // assemble all shape tuples within the budget, riggings ranging over
        // the vacancy-forced window [-length, p_i]
        std::size_t accepted = 0, candidates = 0;
        std::vector<std::vector<int>> chosen(n);
        std::function<void(int, int)> walk_shapes = [&](int index, int left) {
            if (!ok) return;
            if (index == n) {
                std::function<void(int, int, std::vector<RiggedPartition>&)> walk_rigs =
                    [&](int a, int row, std::vector<RiggedPartition>& acc) {
                        if (!ok) return;
                        if (a == n) {
                            RiggedConfiguration rc(n, acc);
                            ++candidates;
                            bool valid = validate(rc).valid();
                            bool reachable = reached.count(rc) > 0;
                            if (valid) ++accepted;
                            if (valid != reachable) {
                                std::ostringstream msg;
                                msg << (valid ? "false accept: " : "false reject: ")
                                    << canonical_key(rc);
                                detail = msg.str();
                                ok = false;
                            }
                            return;
                        }
                        if (row == static_cast<int>(chosen[a].size())) {
                            walk_rigs(a + 1, 0, acc);
                            return;
                        }
                        int len = chosen[a][row];
                        for (int rig = -len; rig <= len && ok; ++rig) {
                            auto strings = acc[a].strings;
                            strings.push_back({len, rig});
                            RiggedPartition saved = acc[a];
                            acc[a] = RiggedPartition(strings);
                            walk_rigs(a, row + 1, acc);
                            acc[a] = saved;
                        }
                    };
                std::vector<RiggedPartition> acc(n);
                walk_rigs(0, 0, acc);
                return;
            }
            for (const auto& shape : shapes) {
                int boxes = 0;
                for (int len : shape) boxes += len;
                if (boxes > left) continue;
                chosen[index] = shape;
                walk_shapes(index + 1, left - boxes);
            }
        };
        walk_shapes(0, budget);
        if (!ok) break;
        // candidate window covers the reachable set, and counts line up
        std::size_t reach_count = reached.size();
        ok &= expect(accepted == reach_count,
                     "accepted count " + std::to_string(accepted) + " vs reachable " +
                         std::to_string(reach_count),
                     detail);
        for (const auto& rc : reached) {
            bool inside = true;
            for (int a = 1; a <= n && inside; ++a)
                for (const RiggedString& s : rc.partitions[a - 1].strings)
                    if (s.rigging < -s.length || s.rigging > s.length) inside = false;
            ok &= expect(inside, "reachable configuration outside the candidate window", detail);
            if (!ok) break;
        }
        (void)candidates;
    }
    return ok;
}

// ---- criterion 5: transport through the explicit isomorphism -------------
bool criterion_transport(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 3 && ok; ++n) {
        TableauGraph tab = bfs_tableaux(n, 5);
        for (const MarginallyLargeTableau& t : tab.nodes) {
            RiggedConfiguration image = rc_from_lanes(phi(t));
            for (int i = 1; i <= n && ok; ++i) {
                ok &= expect(rc_from_lanes(phi(apply_f(t, i))) == apply_f(image, i),
                             "lowering transport", detail);
                auto te = apply_e(t, i);
                auto re = apply_e(image, i);
                ok &= expect(te.has_value() == re.has_value(), "raising annihilation transport",
                             detail);
                if (te && re)
                    ok &= expect(rc_from_lanes(phi(*te)) == *re, "raising transport", detail);
            }
            if (!ok) break;
        }
    }
    return ok;
}

// ---- criterion 6: structural invariants over the reachable set -----------
bool criterion_structure(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        RcGraph rig = bfs_rigged(n, 6);
        for (std::size_t u = 0; u < rig.nodes.size() && ok; ++u) {
            const RiggedConfiguration& rc = rig.nodes[u];
            for (int a = 1; a <= n && ok; ++a) {
                const RiggedPartition& part = rc.partitions[a - 1];
                ok &= expect(part.row_count() <= maxr(a, n), "row-count bound", detail);
                for (std::size_t j = 0; j + 1 < part.strings.size(); ++j)
                    if (part.strings[j].length == part.strings[j + 1].length)
                        ok &= expect(part.strings[j].rigging == part.strings[j + 1].rigging,
                                     "equal rows carry equal riggings", detail);
            }
            // one contributing box per column, read off the lanes
            BoxAnnotation ann = annotate_boxes(seq_from_rc(rc));
            for (const auto& lanes : ann.contributing)
                for (const auto& lane : lanes) {
                    int count = 0;
                    for (bool c : lane) count += c ? 1 : 0;
                    ok &= expect(count <= 1, "one contributing box per column", detail);
                }
        }
        if (!ok) break;
        // colabel conservation across every lowering edge
        for (const GraphEdge& e : rig.edges) {
            const RiggedConfiguration& u = rig.nodes[e.from];
            const RiggedConfiguration& v = rig.nodes[e.to];
            for (int b = 1; b <= n && ok; ++b) {
                if (b == e.letter) continue;  // the mutated partition changes one string
                std::multiset<std::pair<int, int>> before, after;
                for (const RiggedString& s : u.partitions[b - 1].strings)
                    before.insert({s.length, vacancy(u, b, s.length) - s.rigging});
                for (const RiggedString& s : v.partitions[b - 1].strings)
                    after.insert({s.length, vacancy(v, b, s.length) - s.rigging});
                ok &= expect(before == after, "colabel conservation", detail);
            }
            if (!ok) break;
        }
    }
    return ok;
}

// ---- criterion 7: box-adding procedure postconditions ---------------------

int tightest_r(const CascadingSequence& seq, int p) {
    LaneDecomposition dec = form_lanes(seq);
    int best = -1;
    for (int i = 1; i <= dec.lane_count(p - 1); ++i)
        if (ends_at_right_endpoint(seq, dec.lane(p - 1, i))) {
            int len = dec.lane_length(p - 1, i);
            if (best == -1 || len - 1 < best) best = len - 1;
        }
    return best;
}

bool lyndon_ok(const CascadingSequence& seq, int l) {
    std::vector<int> heads;
    for (const auto& iv : seq.subintervals()) heads.push_back(iv.head);
    for (int j = 1; j < l; ++j) {
        int high = 0, low = 0;
        for (int h : heads) {
            if (h == l) ++high;
            if (h == j) ++low;
            if (low > high) return false;
        }
    }
    return true;
}

bool check_plateau_kind(const CascadingSequence& seq, int p, std::optional<int> q,
                        std::optional<int> r, std::string& detail) {
    PlateauKind kind{p, q, r, false};
    if (!is_plateau(seq, kind)) {
        detail = "plateau postcondition failed";
        return false;
    }
    return true;
}

struct StretchSpot {
    int height = 0;
    int length = 0;
    int y = 0;
};

std::vector<StretchSpot> truncated_stretches(const std::vector<int>& shape) {
    std::vector<StretchSpot> out;
    std::vector<int> distinct;
    for (int i = static_cast<int>(shape.size()) - 1; i >= 0; --i)
        if (distinct.empty() || shape[i] != distinct.back()) distinct.push_back(shape[i]);
    int prev = 0;
    for (int len : distinct) {
        int rows_ge = 0;
        for (int rl : shape)
            if (rl >= len) ++rows_ge;
        out.push_back({rows_ge - 1, len - prev, prev});
        prev = len;
    }
    return out;
}

// One contributing-step postcondition bundle shared by the call sites.
// The plateau kind is checked with the growth flow's bookkept parameters
// (the stretch height as q, the operation height as r); top-row padding is
// past the kind bookkeeping and asserts the starred plateau only.
bool check_contributing_step(const CascadingSequence& before_seq, const CascadingSequence& out,
                             int p, int n, int stretch_height, int op_height, int count,
                             bool top_row, std::string& msg) {
    bool ok = true;
    RiggedConfiguration before = rc_from_lanes(before_seq);
    RiggedConfiguration after = rc_from_lanes(out);
    ok &= expect(is_plateau(out, {p - 1, std::nullopt, std::nullopt, true}),
                 "starred plateau after the contributing step", msg);
    if (!top_row) ok &= check_plateau_kind(out, p, stretch_height, op_height, msg);
    for (int x = p + 1; x <= n; ++x)
        ok &= expect(after.partition(x) == before.partition(x),
                     "partitions above p fixed by the contributing step", msg);
    if (p <= n)
        ok &= expect(after.partition(p).row_lengths() == before.partition(p).row_lengths(),
                     "shape of partition p fixed by the contributing step", msg);
    ok &= expect(after.partition(p - 1).box_count() == before.partition(p - 1).box_count() + count,
                 "contributing box count delta", msg);
    for (int l = 2; l <= p - 1; ++l) ok &= expect(lyndon_ok(out, l), "prefix head counts", msg);
    return ok;
}

bool criterion_procedures(std::string& msg) {
    std::mt19937 rng(777);
    int instances = 0;
    bool ok = true;
    while (instances < 500 && ok) {
        int n = 4 + static_cast<int>(rng() % 6);
        int seeds = 1 + static_cast<int>(rng() % 4);
        CascadingSequence beta(n);
        beta = crystalrig::detail::add_contributing_unchecked(beta, n + 1, 0, seeds, true);
        for (int p = n; p >= 3 && ok; --p) {
            if (!expect(is_plateau(beta, {p - 1, std::nullopt, std::nullopt, true}),
                        "generator lost the starred plateau", msg)) {
                ok = false;
                break;
            }
            // below a starred plateau the partitions mirror the truncations
            // with zero riggings
            RiggedConfiguration state = rc_from_lanes(beta);
            for (int l = 2; l <= p - 1 && ok; ++l) {
                std::vector<int> upper = state.partition(l).row_lengths();
                if (!upper.empty()) upper.erase(upper.begin());
                ok &= expect(state.partition(l - 1).row_lengths() == upper,
                             "truncation shape below a starred plateau", msg);
                for (const RiggedString& s : state.partition(l - 1).strings)
                    ok &= expect(s.rigging == 0, "zero riggings below a starred plateau", msg);
            }
            if (!ok) break;

            for (const StretchSpot& spot : truncated_stretches(state.partition(p).row_lengths())) {
                if (!ok) break;
                int height = spot.height;
                if (p - height - 1 < 1) continue;
                LaneDecomposition dec = form_lanes(beta);
                int cap_boxes = lane_count_of_length(dec, p, height + 1);
                if (cap_boxes == 0) continue;
                // rows that fit beneath this stretch in the current state
                int left_height = spot.y == 0 ? maxr(p - 1, n) : dec.lane_length(p - 1, spot.y);
                int cap_rows = std::min(left_height - height, 2);
                if (cap_rows <= 0) continue;
                int ncb = static_cast<int>(rng() % (cap_boxes + 1));
                int cb2 = (cap_rows >= 2 && ncb > 0 && p - height - 2 >= 1)
                              ? static_cast<int>(rng() % (ncb + 1))
                              : 0;
                int cb1 = static_cast<int>(rng() % (cap_boxes - ncb + 1));

                if (ncb > 0) {
                    RiggedConfiguration before = rc_from_lanes(beta);
                    int r_in = tightest_r(beta, p);
                    CascadingSequence out = add_noncontributing(beta, p, height, ncb);
                    ++instances;
                    RiggedConfiguration after = rc_from_lanes(out);
                    ok &= expect(is_plateau(out, {p - 1, std::nullopt, std::nullopt, true}),
                                 "starred plateau after the noncontributing step", msg);
                    ok &= check_plateau_kind(out, p, height,
                                             r_in == -1 ? std::nullopt : std::optional<int>(r_in),
                                             msg);
                    for (int x = p; x <= n; ++x)
                        ok &= expect(after.partition(x) == before.partition(x),
                                     "upper partitions fixed by the noncontributing step", msg);
                    ok &= expect(after.partition(p - 1).box_count() ==
                                     before.partition(p - 1).box_count() + ncb,
                                 "noncontributing box count delta", msg);
                    for (int l = 2; l <= p - 1; ++l)
                        ok &= expect(lyndon_ok(out, l), "prefix head counts", msg);
                    beta = out;
                }
                if (ok && cb2 > 0) {
                    CascadingSequence out =
                        crystalrig::detail::add_contributing_unchecked(beta, p, height + 1, cb2, false);
                    ++instances;
                    ok &= check_contributing_step(beta, out, p, n, height, height + 1, cb2, false, msg);
                    beta = out;
                }
                if (ok && cb1 > 0) {
                    CascadingSequence out =
                        crystalrig::detail::add_contributing_unchecked(beta, p, height, cb1, false);
                    ++instances;
                    ok &= check_contributing_step(beta, out, p, n, height, height, cb1, false, msg);
                    beta = out;
                }
            }
            if (!ok) break;
            // occasional top-row padding before descending
            if (rng() % 2 == 0) {
                int extra = 1 + static_cast<int>(rng() % 2);
                CascadingSequence out =
                    crystalrig::detail::add_contributing_unchecked(beta, p, 0, extra, true);
                ++instances;
                ok &= check_contributing_step(beta, out, p, n, 0, 0, extra, true, msg);
                beta = out;
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "golden examples", criterion_golden},
        {2, "closed form equals the operator fold", criterion_oracle_equivalence},
        {3, "bijection round trips", criterion_round_trips},
        {4, "growth soundness and completeness", criterion_growth},
        {5, "isomorphism transport", criterion_transport},
        {6, "structural invariants", criterion_structure},
        {7, "procedure postconditions", criterion_procedures},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d (%s): %s (%.2fs)%s%s\n", c.number, c.name.c_str(),
                    ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0) std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
