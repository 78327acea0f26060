#include "crystalrig/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crystalrig/bijection.hpp"
#include "crystalrig/cascading.hpp"
#include "crystalrig/growth.hpp"

namespace crystalrig {

namespace {

void append_int(std::string& out, int value) {
    char buf[16];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, end);
}

}  // namespace

std::string canonical_key(const MarginallyLargeTableau& t) {
    std::string out;
    out.reserve(16 + 4 * static_cast<std::size_t>(t.box_count()));
    out.push_back('T');
    append_int(out, t.rank());
    for (const auto& row : t.rows()) {
        out.push_back('|');
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out.push_back(',');
            append_int(out, row[j]);
        }
    }
    return out;
}

std::string canonical_key(const RiggedConfiguration& rc) {
    std::string out;
    out.reserve(16);
    out.push_back('R');
    append_int(out, rc.rank);
    for (const RiggedPartition& part : rc.partitions) {
        out.push_back('|');
        for (std::size_t j = 0; j < part.strings.size(); ++j) {
            if (j) out.push_back(',');
            append_int(out, part.strings[j].length);
            out.push_back(':');
            append_int(out, part.strings[j].rigging);
        }
    }
    return out;
}

namespace {

template <class Node, class Start>
BfsGraph<Node> bfs_reference_impl(int rank, int depth, const BfsOptions& options, Start start) {
    if (rank < 1 || depth < 0) throw std::invalid_argument("bad bfs parameters");
    BfsGraph<Node> g;
    g.rank = rank;
    g.depth = depth;
    Node origin = start(rank);
    g.nodes.push_back(origin);
    g.keys.push_back(canonical_key(origin));
    g.node_depth.push_back(0);
    g.index.emplace(g.keys[0], 0);
    std::vector<int> frontier{0};
    for (int layer = 0; layer < depth && !frontier.empty(); ++layer) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int a = 1; a <= rank; ++a) {
                Node child = apply_f(g.nodes[u], a);
                std::string key = canonical_key(child);
                auto [it, inserted] = g.index.emplace(key, static_cast<int>(g.nodes.size()));
                if (inserted) {
                    g.nodes.push_back(std::move(child));
                    g.keys.push_back(std::move(key));
                    g.node_depth.push_back(layer + 1);
                    next.push_back(it->second);
                    if (g.nodes.size() > options.node_limit)
                        throw budget_error("node limit exceeded during crystal enumeration");
                }
                g.edges.push_back({u, a, it->second});
            }
        }
        frontier = std::move(next);
    }
    return g;
}

template <class Node, class Start>
BfsGraph<Node> bfs_parallel_impl(int rank, int depth, const BfsOptions& options, Start start) {
    if (rank < 1 || depth < 0) throw std::invalid_argument("bad bfs parameters");
    BfsGraph<Node> g;
    g.rank = rank;
    g.depth = depth;
    Node origin = start(rank);
    g.nodes.push_back(origin);
    g.keys.push_back(canonical_key(origin));
    g.node_depth.push_back(0);
    g.index.emplace(g.keys[0], 0);
    std::vector<int> frontier{0};
    for (int layer = 0; layer < depth && !frontier.empty(); ++layer) {
        // Expand the frontier into per-node buckets, then merge in frontier
        // order (letters ascending) so ids match the sequential reference.
        // The global index is immutable during expansion, so threads drop
        // already-known children early and free them where they were made.
        const int count = static_cast<int>(frontier.size());
        std::vector<std::string> child_keys(static_cast<std::size_t>(count) * rank);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (options.parallel && count > 64)
#endif
        for (int idx = 0; idx < count; ++idx) {
            for (int a = 1; a <= rank; ++a) {
                // children die inside the worker; only keys cross threads,
                // and the few genuinely new nodes are rebuilt at merge time
                Node child = apply_f(g.nodes[frontier[idx]], a);
                child_keys[static_cast<std::size_t>(idx) * rank + a - 1] = canonical_key(child);
            }
        }
        std::vector<int> next;
        for (int idx = 0; idx < count; ++idx) {
            for (int a = 1; a <= rank; ++a) {
                std::string& key = child_keys[static_cast<std::size_t>(idx) * rank + a - 1];
                auto [it, inserted] = g.index.emplace(std::move(key), static_cast<int>(g.nodes.size()));
                if (inserted) {
                    g.nodes.push_back(apply_f(g.nodes[frontier[idx]], a));
                    g.keys.push_back(it->first);
                    g.node_depth.push_back(layer + 1);
                    next.push_back(it->second);
                    if (g.nodes.size() > options.node_limit)
                        throw budget_error("node limit exceeded during crystal enumeration");
                }
                g.edges.push_back({frontier[idx], a, it->second});
            }
        }
        frontier = std::move(next);
    }
    return g;
}

}  // namespace

TableauGraph bfs_tableaux(int rank, int depth, const BfsOptions& options) {
    return bfs_parallel_impl<MarginallyLargeTableau>(rank, depth, options,
                                                     [](int n) { return highest_weight(n); });
}

RcGraph bfs_rigged(int rank, int depth, const BfsOptions& options) {
    return bfs_parallel_impl<RiggedConfiguration>(rank, depth, options,
                                                  [](int n) { return empty_rc(n); });
}

TableauGraph bfs_tableaux_reference(int rank, int depth, const BfsOptions& options) {
    return bfs_reference_impl<MarginallyLargeTableau>(rank, depth, options,
                                                      [](int n) { return highest_weight(n); });
}

RcGraph bfs_rigged_reference(int rank, int depth, const BfsOptions& options) {
    return bfs_reference_impl<RiggedConfiguration>(rank, depth, options,
                                                   [](int n) { return empty_rc(n); });
}

CrossCheckReport cross_check(const TableauGraph& tab, const RcGraph& rig) {
    CrossCheckReport report;
    report.node_count = tab.nodes.size();
    report.edge_count = tab.edges.size();
    auto fail = [&](const std::string& witness) {
        report.ok = false;
        report.mismatch = witness;
        return report;
    };
    if (tab.rank != rig.rank || tab.depth != rig.depth)
        return fail("graphs were generated with different parameters");
    if (tab.nodes.size() != rig.nodes.size())
        return fail("node counts differ: " + std::to_string(tab.nodes.size()) + " vs " +
                    std::to_string(rig.nodes.size()));
    std::vector<int> image(tab.nodes.size(), -1);
    std::vector<char> hit(rig.nodes.size(), 0);
    for (std::size_t u = 0; u < tab.nodes.size(); ++u) {
        RiggedConfiguration psi = rc_from_lanes(phi(tab.nodes[u]));
        auto it = rig.index.find(canonical_key(psi));
        if (it == rig.index.end())
            return fail("image of tableau node " + std::to_string(u) + " (" + tab.keys[u] +
                        ") missing from the rigged graph");
        if (rig.node_depth[it->second] != tab.node_depth[u])
            return fail("depth mismatch at tableau node " + std::to_string(u));
        if (hit[it->second])
            return fail("two tableau nodes share the image " + rig.keys[it->second]);
        hit[it->second] = 1;
        image[u] = it->second;
    }
    std::set<std::tuple<int, int, int>> rig_edges;
    for (const GraphEdge& e : rig.edges) rig_edges.insert({e.from, e.letter, e.to});
    for (const GraphEdge& e : tab.edges)
        if (!rig_edges.count({image[e.from], e.letter, image[e.to]}))
            return fail("edge (" + std::to_string(e.from) + ", f" + std::to_string(e.letter) + ", " +
                        std::to_string(e.to) + ") has no image edge");
    if (tab.edges.size() != rig.edges.size()) return fail("edge counts differ");
    return report;
}

VerifyReport verify_crystal(int rank, int depth, const BfsOptions& options) {
    VerifyReport report;
    auto fail = [&](const std::string& what) {
        if (report.ok) {
            report.ok = false;
            report.first_failure = what;
        }
    };
    TableauGraph tab = bfs_tableaux(rank, depth, options);
    RcGraph rig = bfs_rigged(rank, depth, options);
    report.nodes = tab.nodes.size() + rig.nodes.size();
    report.edges = tab.edges.size() + rig.edges.size();

    CrossCheckReport cc = cross_check(tab, rig);
    ++report.checks;
    if (!cc.ok) fail("cross check: " + cc.mismatch);

    for (std::size_t u = 0; u < tab.nodes.size(); ++u) {
        const MarginallyLargeTableau& t = tab.nodes[u];
        ++report.checks;
        if (!(phi_inverse(phi(t)) == t)) fail("phi round trip failed at " + tab.keys[u]);
        const RiggedConfiguration psi = rc_from_lanes(phi(t));
        CrystalStats st = stats(psi);
        ++report.checks;
        if (st.weight != weight(t)) fail("weight transport failed at " + tab.keys[u]);
        for (int a = 1; a <= rank; ++a) {
            ++report.checks;
            if (signature_minus(t, a) != st.epsilon[a - 1])
                fail("epsilon transport failed at " + tab.keys[u]);
        }
    }

    for (std::size_t u = 0; u < rig.nodes.size(); ++u) {
        const RiggedConfiguration& rc = rig.nodes[u];
        ++report.checks;
        if (!validate(rc).valid()) fail("growth validation rejected " + rig.keys[u]);
        ++report.checks;
        if (!(rc_from_lanes(seq_from_rc(rc)) == rc)) fail("sequence round trip failed at " + rig.keys[u]);
        int depth_sum = 0;
        for (const RiggedPartition& part : rc.partitions) depth_sum += part.box_count();
        ++report.checks;
        if (depth_sum != rig.node_depth[u]) fail("grading failed at " + rig.keys[u]);
        for (int a = 1; a <= rank; ++a) {
            const RiggedPartition& part = rc.partitions[a - 1];
            ++report.checks;
            if (part.row_count() > maxr(a, rank)) fail("row bound failed at " + rig.keys[u]);
            for (std::size_t j = 0; j + 1 < part.strings.size(); ++j) {
                ++report.checks;
                if (part.strings[j].length == part.strings[j + 1].length &&
                    part.strings[j].rigging != part.strings[j + 1].rigging)
                    fail("equal-length riggings differ at " + rig.keys[u]);
            }
            for (const RiggedString& s : part.strings) {
                ++report.checks;
                if (s.rigging < -s.length || s.rigging > s.length)
                    fail("rigging outside the lane-count window at " + rig.keys[u]);
            }
        }
    }

    // Edge-level checks: raising inverts lowering and untouched strings
    // keep their colabels.
    for (const GraphEdge& e : rig.edges) {
        const RiggedConfiguration& u = rig.nodes[e.from];
        const RiggedConfiguration& v = rig.nodes[e.to];
        ++report.checks;
        auto back = apply_e(v, e.letter);
        if (!back || !(*back == u)) fail("raising does not invert lowering on an edge");
        for (int b = 1; b <= rank; ++b) {
            std::multiset<std::pair<int, int>> before, after;
            for (const RiggedString& s : u.partitions[b - 1].strings)
                before.insert({s.length, vacancy(u, b, s.length) - s.rigging});
            for (const RiggedString& s : v.partitions[b - 1].strings)
                after.insert({s.length, vacancy(v, b, s.length) - s.rigging});
            if (b == e.letter) {
                // remove the mutated string from both sides
                const auto& pu = u.partitions[b - 1];
                bool fresh = pu.empty();
                int x = 0;
                if (!fresh) {
                    x = pu.strings[0].rigging;
                    for (const RiggedString& s : pu.strings) x = std::min(x, s.rigging);
                    fresh = x > 0;
                }
                auto take = [&](std::multiset<std::pair<int, int>>& from, int len, int colabel) {
                    auto found = from.find({len, colabel});
                    if (found == from.end()) return false;
                    from.erase(found);
                    return true;
                };
                if (fresh) {
                    if (!take(after, 1, vacancy(v, b, 1) + 1))
                        fail("added string missing after a lowering edge");
                } else {
                    int l = 0;
                    for (const RiggedString& s : pu.strings)
                        if (s.rigging == x) l = std::max(l, s.length);
                    if (!take(before, l, vacancy(u, b, l) - x) ||
                        !take(after, l + 1, vacancy(v, b, l + 1) - (x - 1)))
                        fail("mutated string misidentified on a lowering edge");
                }
            }
            ++report.checks;
            if (before != after) fail("colabel conservation failed on an edge");
        }
    }

    std::map<int, std::size_t> tab_layers, rig_layers;
    for (int dvalue : tab.node_depth) ++tab_layers[dvalue];
    for (int dvalue : rig.node_depth) ++rig_layers[dvalue];
    ++report.checks;
    if (tab_layers != rig_layers) fail("per-depth node counts differ between models");
    return report;
}

}  // namespace crystalrig
