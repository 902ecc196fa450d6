#pragma once

// Brute-force reference implementations used as independent oracles in the
// test suite. Everything here recomputes definitions literally and slowly,
// on purpose, so it shares no code path with the library implementations.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/gen.hpp"
#include "strongedge/graph.hpp"
#include "strongedge/structure.hpp"

namespace testutil {

using namespace strongedge;

inline Graph make_graph(std::initializer_list<std::pair<VertexId, VertexId>> edges,
                        std::initializer_list<VertexId> isolated = {}) {
    std::vector<std::pair<VertexId, VertexId>> e(edges);
    std::vector<VertexId> iso(isolated);
    return Graph::from_edges(e, iso);
}

/// N2 by the quoted definition: all edges xy such that x or y is adjacent to
/// u or v, scanning every edge of the graph, excluding uv itself.
inline std::vector<Edge> brute_n2(const Graph& g, const Edge& uv) {
    std::vector<Edge> out;
    for (const auto& e : g.edges()) {
        if (e == uv) continue;
        bool hit = false;
        for (VertexId x : {e.a, e.b})
            for (VertexId endpoint : {uv.a, uv.b})
                if (g.has_edge(x, endpoint)) hit = true;
        if (hit) out.push_back(e);
    }
    return out;
}

/// Capacity by exhaustive scan over all (special u, other w) pairs.
inline int brute_capacity(const Graph& g) {
    int best = 0;
    for (auto u : special_vertices(g)) {
        std::map<VertexId, int> per_w;
        g.for_each_vertex([&](VertexId v) {
            if (g.degree(v) != 2) return;
            const auto& nb = g.neighbors(v);
            if (nb[0] == u) ++per_w[nb[1]];
            else if (nb[1] == u) ++per_w[nb[0]];
        });
        for (const auto& [w, count] : per_w) best = std::max(best, count);
    }
    return best;
}

/// Validity by the all-pairs definition scan.
inline bool brute_valid(const Graph& g, const Coloring& c) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            int ci = c.color_of(edges[i]);
            int cj = c.color_of(edges[j]);
            if (!ci || !cj || ci != cj) continue;
            const Edge &e = edges[i], &f = edges[j];
            bool conflict = false;
            for (VertexId x : {e.a, e.b})
                for (VertexId y : {f.a, f.b})
                    if (x == y || g.has_edge(x, y)) conflict = true;
            if (conflict) return false;
        }
    return true;
}

/// Exhaustive strong chromatic index: smallest k admitting a valid total
/// coloring with colors 1..k, first edge pinned to color 1. Only sane for
/// |E| <= 8 or so.
inline int brute_strong_index(const Graph& g) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    for (int k = 1; k <= m; ++k) {
        std::vector<int> colors(m, 0);
        colors[0] = 1;
        // depth-first enumeration over edges 1..m-1
        int pos = 1;
        std::vector<int> next(m, 1);
        auto ok_at = [&](int idx) {
            for (int other = 0; other < idx; ++other) {
                if (colors[other] != colors[idx]) continue;
                const Edge &e = edges[idx], &f = edges[other];
                for (VertexId x : {e.a, e.b})
                    for (VertexId y : {f.a, f.b})
                        if (x == y || g.has_edge(x, y)) return false;
            }
            return true;
        };
        if (m == 1) return 1;
        while (pos >= 1) {
            if (pos == m) return k;
            if (next[pos] > k) {
                next[pos] = 1;
                --pos;
                if (pos >= 1) ++next[pos];
                continue;
            }
            colors[pos] = next[pos];
            if (ok_at(pos)) {
                ++pos;
            } else {
                ++next[pos];
            }
        }
    }
    return m;
}

/// Arbitrary (not necessarily 2-degenerate) random simple graph.
inline Graph random_graph(int n, int m, SplitMix64& rng) {
    std::vector<std::pair<VertexId, VertexId>> all;
    for (VertexId i = 0; i < static_cast<VertexId>(n); ++i)
        for (VertexId j = i + 1; j < static_cast<VertexId>(n); ++j)
            all.push_back({i, j});
    // Fisher-Yates prefix shuffle driven by the fixed PRNG.
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(all.size() - i));
        std::swap(all[i], all[j]);
    }
    std::vector<VertexId> verts;
    for (VertexId i = 0; i < static_cast<VertexId>(n); ++i) verts.push_back(i);
    std::vector<std::pair<VertexId, VertexId>> take(
        all.begin(), all.begin() + std::min<std::size_t>(m, all.size()));
    return Graph::from_edges(take, verts);
}

/// Uniformly random (usually invalid) total coloring with colors 1..k.
inline Coloring random_coloring(const Graph& g, int k, SplitMix64& rng) {
    Coloring c(k);
    for (const auto& e : g.edges())
        c.set(e, 1 + static_cast<int>(rng.below(k)));
    return c;
}

} // namespace testutil
