#pragma once

#include "disc/instance.hpp"

#include <vector>

namespace disc {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph. Edge indices are meaningful to callers (interval indices for gap graphs).
struct Graph {
    std::size_t vertices = 0;
    std::vector<Edge> edges;
};

/// Vertices are gaps 0..n; edge i joins the gaps holding the endpoints of interval i.
using GapGraph = Graph;

/// Requires a pruned instance; throws InputError on a useless or redundant interval.
GapGraph build_gap_graph(const Instance1D& pruned);

/// Maximum-cardinality matching (Edmonds' blossom algorithm). Returns edge indices, sorted.
IndexSet max_matching(const Graph& g);

/// Maximum matching plus, for each unmatched vertex, its incident edge of smallest index.
/// Throws Infeasible naming an isolated vertex.
IndexSet min_edge_cover(const Graph& g);

} // namespace disc
