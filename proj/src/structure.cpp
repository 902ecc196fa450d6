#include "strongedge/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strongedge/errors.hpp"

namespace strongedge {

DegeneracyResult degeneracy(const Graph& g) {
    DegeneracyResult res;
    auto verts = g.vertices();
    if (verts.empty()) return res;

    std::vector<int> deg(g.id_bound(), -1);
    for (auto v : verts) deg[v] = g.degree(v);

    // Buckets by current degree; lowest id wins inside a bucket.
    std::set<std::pair<int, VertexId>> queue;
    for (auto v : verts) queue.insert({deg[v], v});

    std::vector<char> removed(g.id_bound(), 0);
    res.order.reserve(verts.size());
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        res.k = std::max(res.k, d);
        res.order.push_back(v);
        removed[v] = 1;
        for (auto w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.insert({deg[w], w});
        }
    }
    return res;
}

bool is_two_degenerate(const Graph& g) {
    return degeneracy(g).k <= 2;
}

std::vector<Edge> n2_edges(const Graph& g, const Edge& e) {
    if (!g.has_edge(e))
        throw InputError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                         " not in graph");
    std::set<Edge> out;
    auto scan = [&](VertexId endpoint) {
        for (auto x : g.neighbors(endpoint)) {
            // x is adjacent to an endpoint of e: every edge at x qualifies.
            for (auto y : g.neighbors(x)) out.insert(Edge(x, y));
        }
    };
    scan(e.a);
    scan(e.b);
    out.erase(e);
    return {out.begin(), out.end()};
}

bool is_special(const Graph& g, VertexId v) {
    if (g.degree(v) < 1) return false;
    int big = 0;
    for (auto n : g.neighbors(v))
        if (g.degree(n) > 2) ++big;
    return big <= 2;
}

std::vector<VertexId> special_vertices(const Graph& g) {
    std::vector<VertexId> out;
    g.for_each_vertex([&](VertexId v) {
        if (is_special(g, v)) out.push_back(v);
    });
    return out;
}

SpecialContext context_at(const Graph& g, VertexId u) {
    SpecialContext ctx;
    ctx.u = u;
    std::map<VertexId, std::vector<VertexId>> by_sharer;
    for (auto n : g.neighbors(u)) {
        int d = g.degree(n);
        if (d > 2) {
            ctx.big_nbrs.push_back(n);
        } else if (d == 1) {
            ctx.leaf_nbrs.push_back(n);
        } else {
            // d == 2: the other neighbor is the sharer this vertex belongs to.
            const auto& nn = g.neighbors(n);
            VertexId w = nn[0] == u ? nn[1] : nn[0];
            by_sharer[w].push_back(n);
        }
    }
    std::vector<std::pair<VertexId, std::vector<VertexId>>> sharers(by_sharer.begin(),
                                                                    by_sharer.end());
    std::stable_sort(sharers.begin(), sharers.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size())
            return a.second.size() > b.second.size();
        return a.first < b.first;
    });
    for (auto& [w, members] : sharers) {
        ctx.sharers.push_back(w);
        ctx.t.push_back(static_cast<int>(members.size()));
        ctx.groups.push_back(std::move(members));
        if (std::find(ctx.big_nbrs.begin(), ctx.big_nbrs.end(), w) != ctx.big_nbrs.end())
            ctx.sharer_overlaps_big = true;
    }
    return ctx;
}

namespace {

struct CapacityScan {
    int capacity = 0;
    VertexId best_u = 0;
    bool found = false;
};

CapacityScan scan_capacity(const Graph& g) {
    // For every degree-2 vertex v with neighbors {x, y}, v is a 2-neighbor
    // shared by the pair (x, y); it counts when the hub side is special.
    std::map<std::pair<VertexId, VertexId>, int> shared;
    g.for_each_vertex([&](VertexId v) {
        if (g.degree(v) != 2) return;
        const auto& nb = g.neighbors(v);
        for (auto [hub, other] : {std::pair{nb[0], nb[1]}, std::pair{nb[1], nb[0]}})
            if (is_special(g, hub)) ++shared[{hub, other}];
    });
    CapacityScan out;
    for (const auto& [pair, count] : shared) {
        VertexId u = pair.first;
        if (!out.found || count > out.capacity ||
            (count == out.capacity &&
             (g.degree(u) < g.degree(out.best_u) ||
              (g.degree(u) == g.degree(out.best_u) && u < out.best_u)))) {
            out.capacity = count;
            out.best_u = u;
            out.found = true;
        }
    }
    return out;
}

} // namespace

int capacity(const Graph& g) {
    return scan_capacity(g).capacity;
}

std::optional<SpecialContext> capacity_context(const Graph& g) {
    auto scan = scan_capacity(g);
    if (!scan.found || scan.capacity == 0) return std::nullopt;
    return context_at(g, scan.best_u);
}

ClassReport class_check(const Graph& g, const Params& p) {
    ClassReport rep;
    rep.delta = g.max_degree();
    rep.capacity = capacity(g);
    rep.degeneracy = degeneracy(g).k;

    if (rep.degeneracy > 2)
        rep.reasons.push_back("not 2-degenerate: degeneracy is " +
                              std::to_string(rep.degeneracy));

    g.for_each_vertex([&](VertexId v) {
        int d = g.degree(v);
        if (d <= p.D) return;
        int leaves = 0;
        for (auto n : g.neighbors(v))
            if (g.degree(n) == 1) ++leaves;
        if (leaves < d - p.D)
            rep.reasons.push_back("vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(d) + " > D but only " +
                                  std::to_string(leaves) + " leaf neighbors (needs " +
                                  std::to_string(d - p.D) + ")");
    });

    bool high_capacity = static_cast<double>(rep.capacity) >= p.tau - kTauGuard;
    int cap = high_capacity ? p.D + 2 : p.degree_cap_loose();
    if (rep.delta > cap)
        rep.reasons.push_back("max degree " + std::to_string(rep.delta) +
                              " exceeds the cap " + std::to_string(cap) +
                              (high_capacity ? " (capacity >= tau)"
                                             : " (capacity < tau)"));

    rep.in_class = rep.reasons.empty();
    return rep;
}

} // namespace strongedge
