#include "strongedge/coloring.hpp"

#include <algorithm>
#include <set>

#include "strongedge/errors.hpp"
#include "strongedge/structure.hpp"

namespace strongedge {

int Coloring::color_of(const Edge& e) const {
    auto it = assign_.find(e);
    return it == assign_.end() ? 0 : it->second;
}

void Coloring::set(const Edge& e, int color) {
    // Colors above K_ are allowed: the reducer completes colorings with
    // overflow colors and reports the budget miss instead of failing.
    if (color < 1) throw UsageError("colors start at 1");
    assign_[e] = color;
}

void Coloring::unset(const Edge& e) {
    assign_.erase(e);
}

int Coloring::max_color() const {
    int best = 0;
    for (const auto& [e, c] : assign_) best = std::max(best, c);
    return best;
}

int Coloring::distinct_colors() const {
    std::set<int> seen;
    for (const auto& [e, c] : assign_) seen.insert(c);
    return static_cast<int>(seen.size());
}

std::string Violation::describe() const {
    std::string s = "edges " + std::to_string(edge_a.a) + "-" + std::to_string(edge_a.b) +
                    " and " + std::to_string(edge_b.a) + "-" + std::to_string(edge_b.b) +
                    " share a color; ";
    if (shared_endpoint)
        s += "they meet at vertex " + std::to_string(shared);
    else
        s += "edge " + std::to_string(connecting.a) + "-" + std::to_string(connecting.b) +
             " joins them";
    return s;
}

bool edges_conflict(const Graph& g, const Edge& e, const Edge& f) {
    for (VertexId x : {e.a, e.b})
        for (VertexId y : {f.a, f.b})
            if (x == y || g.has_edge(x, y)) return true;
    return false;
}

std::vector<int> available_colors(const Graph& g, const Coloring& c, const Edge& e,
                                  const Params& p) {
    if (c.is_colored(e))
        throw UsageError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                         " is already colored");
    std::vector<char> blocked(p.K + 1, 0);
    for (const auto& f : n2_edges(g, e)) {
        int col = c.color_of(f);
        if (col >= 1 && col <= p.K) blocked[col] = 1;
    }
    std::vector<int> out;
    for (int col = 1; col <= p.K; ++col)
        if (!blocked[col]) out.push_back(col);
    return out;
}

namespace {

std::optional<Violation> check_pair(const Graph& g, const Edge& e, const Edge& f) {
    Violation v;
    v.edge_a = e;
    v.edge_b = f;
    for (VertexId x : {e.a, e.b})
        for (VertexId y : {f.a, f.b})
            if (x == y) {
                v.shared_endpoint = true;
                v.shared = x;
                return v;
            }
    for (VertexId x : {e.a, e.b})
        for (VertexId y : {f.a, f.b})
            if (g.has_edge(x, y)) {
                v.shared_endpoint = false;
                v.connecting = Edge(x, y);
                return v;
            }
    return std::nullopt;
}

std::optional<Violation> scan(const Graph& g, const Coloring& c) {
    // Group colored edges by color, then test each same-color pair against
    // the induced-matching condition.
    std::map<int, std::vector<Edge>> classes;
    for (const auto& [e, col] : c.assignment()) classes[col].push_back(e);
    for (const auto& [col, edges] : classes) {
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (auto v = check_pair(g, edges[i], edges[j])) return v;
    }
    return std::nullopt;
}

} // namespace

std::optional<Violation> verify_strong(const Graph& g, const Coloring& c) {
    for (const auto& e : g.edges())
        if (!c.is_colored(e))
            throw UsageError("coloring is partial: edge " + std::to_string(e.a) + "-" +
                             std::to_string(e.b) + " is uncolored");
    return scan(g, c);
}

std::optional<Violation> find_violation_partial(const Graph& g, const Coloring& c) {
    return scan(g, c);
}

Coloring greedy_color(const Graph& g, const std::vector<Edge>& order) {
    {
        auto sorted_order = order;
        std::sort(sorted_order.begin(), sorted_order.end());
        if (sorted_order != g.edges())
            throw UsageError("order is not a permutation of the edge set");
    }
    Coloring c;
    for (const auto& e : order) {
        std::set<int> blocked;
        for (const auto& f : n2_edges(g, e)) {
            int col = c.color_of(f);
            if (col) blocked.insert(col);
        }
        int col = 1;
        while (blocked.count(col)) ++col;
        c.set(e, col);
    }
    return c;
}

void swap_colors(Coloring& c, const Edge& e1, const Edge& e2) {
    int c1 = c.color_of(e1);
    int c2 = c.color_of(e2);
    if (!c1 || !c2) throw UsageError("swap_colors requires both edges colored");
    c.set(e1, c2);
    c.set(e2, c1);
}

} // namespace strongedge
