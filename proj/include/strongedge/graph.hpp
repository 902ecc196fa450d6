#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace strongedge {

using VertexId = std::uint32_t;

/// Undirected edge with normalized endpoints (a < b).
struct Edge {
    VertexId a;
    VertexId b;

    Edge() : a(0), b(0) {}
    Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Mutable simple undirected graph with stable integer vertex ids.
///
/// Adjacency lists are kept sorted so every iteration order is deterministic.
/// Removing a vertex or edge never disturbs the identity of the others;
/// add_vertex always mints a fresh id.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list plus optional isolated vertices.
    /// Duplicate edges are merged; a self-loop is an input error.
    static Graph from_edges(std::span<const std::pair<VertexId, VertexId>> edges,
                            std::span<const VertexId> extra_vertices = {});

    VertexId add_vertex();
    void ensure_vertex(VertexId v);

    /// Adds the edge uv; no-op if already present. Throws InputError on u == v.
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);

    /// Removes an isolated vertex. Throws UsageError if it still has edges.
    void remove_vertex(VertexId v);

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

    int degree(VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;

    std::size_t vertex_count() const { return alive_count_; }
    std::size_t edge_count() const { return m_; }

    /// Alive vertex ids in ascending order.
    std::vector<VertexId> vertices() const;
    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    int max_degree() const;

    /// One past the largest id ever allocated (dead ids included).
    VertexId id_bound() const { return static_cast<VertexId>(adj_.size()); }

    void for_each_vertex(const std::function<void(VertexId)>& fn) const;

private:
    void check_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adj_;
    std::vector<char> alive_;
    std::size_t alive_count_ = 0;
    std::size_t m_ = 0;
};

/// Number of vertices of degree at least two — the reduction measure.
int measure(const Graph& g);

} // namespace strongedge

template <>
struct std::hash<strongedge::Edge> {
    std::size_t operator()(const strongedge::Edge& e) const noexcept {
        return (static_cast<std::size_t>(e.a) << 32) ^ e.b;
    }
};
