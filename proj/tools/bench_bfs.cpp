// Compares the sequential reference enumeration against the
// frontier-parallel kernel and checks that both produce identical graphs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "crystalrig/oracle.hpp"

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

template <class Graph>
bool same_graph(const Graph& a, const Graph& b) {
    return a.keys == b.keys && a.node_depth == b.node_depth && a.edges == b.edges;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace crystalrig;
    int rank = argc > 1 ? std::atoi(argv[1]) : 4;
    int depth = argc > 2 ? std::atoi(argv[2]) : 9;
    BfsOptions options;
    options.node_limit = 4000000;

    std::printf("%-10s %6s %6s %10s %12s %12s %8s\n", "model", "rank", "depth", "nodes",
                "serial[ms]", "parallel[ms]", "match");

    {
        TableauGraph ref, par;
        double ts = time_ms([&] { ref = bfs_tableaux_reference(rank, depth, options); });
        double tp = time_ms([&] { par = bfs_tableaux(rank, depth, options); });
        std::printf("%-10s %6d %6d %10zu %12.2f %12.2f %8s\n", "tableaux", rank, depth,
                    ref.nodes.size(), ts, tp, same_graph(ref, par) ? "yes" : "NO");
        if (!same_graph(ref, par)) return 1;
    }
    {
        RcGraph ref, par;
        double ts = time_ms([&] { ref = bfs_rigged_reference(rank, depth, options); });
        double tp = time_ms([&] { par = bfs_rigged(rank, depth, options); });
        std::printf("%-10s %6d %6d %10zu %12.2f %12.2f %8s\n", "rigged", rank, depth,
                    ref.nodes.size(), ts, tp, same_graph(ref, par) ? "yes" : "NO");
        if (!same_graph(ref, par)) return 1;
    }
    return 0;
}
