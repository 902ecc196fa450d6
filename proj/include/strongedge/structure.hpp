#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strongedge/graph.hpp"
#include "strongedge/params.hpp"

namespace strongedge {

struct DegeneracyResult {
    int k = 0;
    std::vector<VertexId> order; // elimination order witnessing k
};

/// Min-degree peeling. Each vertex in `order` has at most k neighbors among
/// the vertices that come later in the order. Ties break on lowest id.
DegeneracyResult degeneracy(const Graph& g);

bool is_two_degenerate(const Graph& g);

/// Edges xy (excluding uv itself) such that x or y is adjacent to u or v;
/// exactly the edges that may not share a color with uv. Sorted.
std::vector<Edge> n2_edges(const Graph& g, const Edge& e);

/// True iff v has degree >= 1 and at most two neighbors of degree more than
/// two. Isolated vertices are ignored by all structural queries.
bool is_special(const Graph& g, VertexId v);

/// All special vertices, ascending.
std::vector<VertexId> special_vertices(const Graph& g);

/// The local structure around a special vertex u: its big neighbors, the
/// vertices sharing degree-2 neighbors with it, and those shared neighbors
/// grouped per sharer with non-increasing group sizes.
struct SpecialContext {
    VertexId u = 0;
    std::vector<VertexId> big_nbrs;                // 0-2 neighbors of degree > 2
    std::vector<VertexId> sharers;                 // w_1..w_s
    std::vector<std::vector<VertexId>> groups;     // groups[i] = v_{i,1}..v_{i,t_i}
    std::vector<int> t;                            // t_1 >= ... >= t_s >= 1
    std::vector<VertexId> leaf_nbrs;               // degree-1 neighbors of u
    bool sharer_overlaps_big = false;              // some w_i is also u_1 or u_2

    int t1() const { return t.empty() ? 0 : t.front(); }
};

/// Builds the context at a specific special vertex. Groups cover exactly the
/// degree-2 neighbors of u; leaf neighbors are listed separately.
SpecialContext context_at(const Graph& g, VertexId u);

/// Maximum number of degree-2 vertices shared by a special vertex and one
/// other vertex (0 when no special vertex shares any 2-neighbor).
int capacity(const Graph& g);

/// Context at a special vertex realizing the capacity; none when capacity is
/// zero. Among realizing vertices picks the one minimizing degree, then id.
std::optional<SpecialContext> capacity_context(const Graph& g);

struct ClassReport {
    bool in_class = false;
    std::vector<std::string> reasons;
    int delta = 0;
    int capacity = 0;
    int degeneracy = 0;
};

/// Checks the hypotheses under which strong_color guarantees its palette:
/// 2-degeneracy, the leaf condition for vertices of degree > D, and the
/// capacity-regime-dependent max-degree cap.
ClassReport class_check(const Graph& g, const Params& p);

} // namespace strongedge
