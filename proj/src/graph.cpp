#include "strongedge/graph.hpp"

#include <algorithm>

#include "strongedge/errors.hpp"

namespace strongedge {

Graph Graph::from_edges(std::span<const std::pair<VertexId, VertexId>> edges,
                        std::span<const VertexId> extra_vertices) {
    Graph g;
    for (auto v : extra_vertices) g.ensure_vertex(v);
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        g.ensure_vertex(u);
        g.ensure_vertex(v);
        g.add_edge(u, v);
    }
    return g;
}

VertexId Graph::add_vertex() {
    adj_.emplace_back();
    alive_.push_back(1);
    ++alive_count_;
    return static_cast<VertexId>(adj_.size() - 1);
}

void Graph::ensure_vertex(VertexId v) {
    if (v >= adj_.size()) {
        adj_.resize(v + 1);
        alive_.resize(v + 1, 0);
    }
    if (!alive_[v]) {
        alive_[v] = 1;
        ++alive_count_;
    }
}

void Graph::check_vertex(VertexId v) const {
    if (!has_vertex(v))
        throw UsageError("unknown vertex " + std::to_string(v));
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    check_vertex(u);
    check_vertex(v);
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v)
        throw UsageError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " not in graph");
    nu.erase(it);
    auto& nv = adj_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --m_;
}

void Graph::remove_vertex(VertexId v) {
    check_vertex(v);
    if (!adj_[v].empty())
        throw UsageError("vertex " + std::to_string(v) + " is not isolated");
    alive_[v] = 0;
    --alive_count_;
}

bool Graph::has_vertex(VertexId v) const {
    return v < alive_.size() && alive_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(alive_count_);
    for (VertexId v = 0; v < alive_.size(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId v = 0; v < adj_.size(); ++v) {
        if (!alive_[v]) continue;
        for (auto w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    }
    return out;
}

int Graph::max_degree() const {
    int best = 0;
    for (VertexId v = 0; v < adj_.size(); ++v)
        if (alive_[v]) best = std::max(best, static_cast<int>(adj_[v].size()));
    return best;
}

void Graph::for_each_vertex(const std::function<void(VertexId)>& fn) const {
    for (VertexId v = 0; v < alive_.size(); ++v)
        if (alive_[v]) fn(v);
}

int measure(const Graph& g) {
    int count = 0;
    g.for_each_vertex([&](VertexId v) {
        if (g.degree(v) >= 2) ++count;
    });
    return count;
}

} // namespace strongedge
