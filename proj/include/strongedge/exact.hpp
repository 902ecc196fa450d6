#pragma once

#include <cstdint>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

/// Conflict graph of a source graph: one vertex per source edge, adjacency
/// between edges that may not share a color. Proper vertex colorings of this
/// graph are exactly the strong edge-colorings of the source.
struct ConflictGraph {
    std::vector<Edge> source_edges;          // index -> source edge, sorted
    std::vector<std::vector<int>> adj;       // sorted neighbor indices
    std::size_t size() const { return source_edges.size(); }
};

ConflictGraph conflict_graph(const Graph& g);

struct ExactLimits {
    std::size_t max_edges = 16;
    double time_budget_seconds = 30.0;
};

struct ExactResult {
    int chi = 0;          // the strong chromatic index
    Coloring witness;     // a valid coloring attaining it
};

/// Exact strong chromatic index by branch-and-bound vertex coloring of the
/// conflict graph: saturation-ordered branching, greedy-clique lower bound,
/// first branching vertex pinned to color 1. Throws ResourceError with the
/// best bounds found when a limit is exceeded.
ExactResult exact_strong_index(const Graph& g, const ExactLimits& limits = {});

/// Size of a greedily grown set of pairwise conflicting edges; a lower bound
/// on the strong chromatic index.
int conflict_clique_lower_bound(const Graph& g);

} // namespace strongedge
