#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "crystalrig/rigged.hpp"
#include "crystalrig/tableau.hpp"

namespace crystalrig {

struct GraphEdge {
    int from = 0;
    int letter = 0;
    int to = 0;
    bool operator==(const GraphEdge&) const = default;
};

/// Crystal graph produced by breadth-first lowering from the highest
/// weight element.  Nodes are deduplicated by canonical serialization and
/// numbered in discovery order (frontier order, letters ascending), so two
/// runs over the same parameters are bit-identical.  Edges are recorded
/// for every expanded layer (all nodes of depth < the requested depth).
template <class Node>
struct BfsGraph {
    int rank = 0;
    int depth = 0;
    std::vector<Node> nodes;
    std::vector<std::string> keys;
    std::vector<int> node_depth;
    std::vector<GraphEdge> edges;
    std::unordered_map<std::string, int> index;
};

using TableauGraph = BfsGraph<MarginallyLargeTableau>;
using RcGraph = BfsGraph<RiggedConfiguration>;

struct BfsOptions {
    std::size_t node_limit = 1000000;
    bool parallel = true;
};

std::string canonical_key(const MarginallyLargeTableau& t);
std::string canonical_key(const RiggedConfiguration& rc);

/// Frontier-parallel enumeration (OpenMP when available; set
/// options.parallel = false to force the sequential path).
TableauGraph bfs_tableaux(int rank, int depth, const BfsOptions& options = {});
RcGraph bfs_rigged(int rank, int depth, const BfsOptions& options = {});

/// Plain sequential reference kept for testing the parallel kernels.
TableauGraph bfs_tableaux_reference(int rank, int depth, const BfsOptions& options = {});
RcGraph bfs_rigged_reference(int rank, int depth, const BfsOptions& options = {});

struct CrossCheckReport {
    bool ok = true;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::string mismatch;  // first witness when !ok
};

/// Verifies that rc_from_lanes . phi is a depth- and edge-preserving
/// bijection between the two graphs.
CrossCheckReport cross_check(const TableauGraph& tab, const RcGraph& rig);

/// Line-oriented dump: "node\t<id>\t<key>" then "edge\t<u>\t<a>\t<v>".
template <class Node>
void dump_graph(const BfsGraph<Node>& g, std::ostream& out) {
    for (std::size_t i = 0; i < g.keys.size(); ++i)
        out << "node\t" << i << "\t" << g.keys[i] << "\n";
    for (const auto& e : g.edges)
        out << "edge\t" << e.from << "\t" << e.letter << "\t" << e.to << "\n";
}

struct VerifyReport {
    bool ok = true;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t checks = 0;
    std::string first_failure;
};

/// Runs the cross-check plus the per-node and per-edge invariant suites
/// (round trips, growth acceptance, rigging structure, colabel
/// conservation, statistics transport) at the given rank and depth.
VerifyReport verify_crystal(int rank, int depth, const BfsOptions& options = {});

}  // namespace crystalrig
