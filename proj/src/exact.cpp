#include "strongedge/exact.hpp"

#include <algorithm>
#include <chrono>

#include "strongedge/errors.hpp"

namespace strongedge {

ConflictGraph conflict_graph(const Graph& g) {
    ConflictGraph cg;
    cg.source_edges = g.edges();
    std::size_t n = cg.source_edges.size();
    cg.adj.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edges_conflict(g, cg.source_edges[i], cg.source_edges[j])) {
                cg.adj[i].push_back(static_cast<int>(j));
                cg.adj[j].push_back(static_cast<int>(i));
            }
    for (auto& row : cg.adj) std::sort(row.begin(), row.end());
    return cg;
}

int conflict_clique_lower_bound(const Graph& g) {
    auto cg = conflict_graph(g);
    std::size_t n = cg.size();
    if (n == 0) return 0;

    // Seed with the highest-degree vertex, then greedily extend with the
    // highest-degree candidate still adjacent to the whole clique.
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cg.adj[a].size() != cg.adj[b].size())
            return cg.adj[a].size() > cg.adj[b].size();
        return a < b;
    });
    std::vector<int> clique;
    for (int cand : order) {
        bool ok = std::all_of(clique.begin(), clique.end(), [&](int v) {
            return std::binary_search(cg.adj[v].begin(), cg.adj[v].end(), cand);
        });
        if (ok) clique.push_back(cand);
    }
    return static_cast<int>(clique.size());
}

namespace {

struct Solver {
    const ConflictGraph& cg;
    std::chrono::steady_clock::time_point deadline;
    int n;
    int best_ub;                       // colors in the best complete coloring
    std::vector<int> best_assignment;  // attaining best_ub
    std::vector<int> color;            // current partial assignment, 0 = none
    int lower;
    long long ticks = 0;

    Solver(const ConflictGraph& graph, int lb, int ub, std::vector<int> greedy,
           std::chrono::steady_clock::time_point stop)
        : cg(graph),
          deadline(stop),
          n(static_cast<int>(graph.size())),
          best_ub(ub),
          best_assignment(std::move(greedy)),
          color(graph.size(), 0),
          lower(lb) {}

    void check_time() {
        if ((++ticks & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline)
            throw ResourceError("exact solver exceeded its time budget", lower, best_ub);
    }

    int pick_vertex() const {
        int best = -1;
        int best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            std::vector<char> seen(best_ub + 1, 0);
            int sat = 0;
            for (int w : cg.adj[v])
                if (color[w] && !seen[color[w]]) {
                    seen[color[w]] = 1;
                    ++sat;
                }
            if (sat > best_sat ||
                (sat == best_sat && best >= 0 &&
                 (cg.adj[v].size() > cg.adj[best].size() ||
                  (cg.adj[v].size() == cg.adj[best].size() && v < best)))) {
                best = v;
                best_sat = sat;
            }
        }
        return best;
    }

    void dfs(int colored, int used) {
        check_time();
        if (best_ub <= lower || used >= best_ub) return;
        if (colored == n) {
            best_ub = used;
            best_assignment = color;
            return;
        }
        int v = pick_vertex();
        std::vector<char> blocked(best_ub + 2, 0);
        for (int w : cg.adj[v])
            if (color[w]) blocked[color[w]] = 1;
        int try_up_to = std::min(used + 1, best_ub - 1);
        for (int c = 1; c <= try_up_to; ++c) {
            if (blocked[c]) continue;
            color[v] = c;
            dfs(colored + 1, std::max(used, c));
            color[v] = 0;
        }
    }
};

} // namespace

ExactResult exact_strong_index(const Graph& g, const ExactLimits& limits) {
    auto cg = conflict_graph(g);
    int n = static_cast<int>(cg.size());
    if (static_cast<std::size_t>(n) > limits.max_edges)
        throw ResourceError("graph has " + std::to_string(n) +
                                " edges, above the limit of " +
                                std::to_string(limits.max_edges),
                            conflict_clique_lower_bound(g), n);
    ExactResult res;
    if (n == 0) return res;

    // Greedy coloring for the initial upper bound.
    std::vector<int> greedy(n, 0);
    int greedy_max = 0;
    for (int v = 0; v < n; ++v) {
        std::vector<char> blocked(n + 2, 0);
        for (int w : cg.adj[v])
            if (greedy[w]) blocked[greedy[w]] = 1;
        int c = 1;
        while (blocked[c]) ++c;
        greedy[v] = c;
        greedy_max = std::max(greedy_max, c);
    }
    int lb = conflict_clique_lower_bound(g);

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(limits.time_budget_seconds));
    Solver solver(cg, lb, greedy_max, greedy, deadline);
    if (lb < greedy_max) {
        // Pin the first branching vertex to color 1 to break symmetry.
        int v0 = solver.pick_vertex();
        solver.color[v0] = 1;
        solver.dfs(1, 1);
        solver.color[v0] = 0;
    }

    res.chi = solver.best_ub;
    res.witness = Coloring(solver.best_ub);
    for (int v = 0; v < n; ++v) res.witness.set(cg.source_edges[v], solver.best_assignment[v]);
    return res;
}

} // namespace strongedge
