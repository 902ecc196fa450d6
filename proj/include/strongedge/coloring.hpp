#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strongedge/graph.hpp"
#include "strongedge/params.hpp"

namespace strongedge {

/// Partial map from edges to colors in [1..K]. K = 0 means "unbounded"
/// (used by the greedy baseline and the exact oracle witness).
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int palette) : K_(palette) {}

    int palette() const { return K_; }

    bool is_colored(const Edge& e) const { return assign_.count(e) > 0; }
    int color_of(const Edge& e) const;                  // 0 when uncolored
    void set(const Edge& e, int color);
    void unset(const Edge& e);

    std::size_t colored_count() const { return assign_.size(); }
    int max_color() const;
    int distinct_colors() const;

    const std::map<Edge, int>& assignment() const { return assign_; }

private:
    int K_ = 0;
    std::map<Edge, int> assign_;
};

/// Two equal-colored edges at line-graph distance <= 1, with the adjacency
/// that proves it: a shared endpoint, or an edge joining their endpoints.
struct Violation {
    Edge edge_a;
    Edge edge_b;
    bool shared_endpoint = false;
    VertexId shared;          // valid when shared_endpoint
    Edge connecting;          // valid otherwise
    std::string describe() const;
};

/// True iff the two edges may not share a color: they meet at a vertex or an
/// edge of g joins their endpoints.
bool edges_conflict(const Graph& g, const Edge& e, const Edge& f);

/// Colors in [1..K] not blocked by colored edges of n2_edges(g, e).
/// The edge must be uncolored.
std::vector<int> available_colors(const Graph& g, const Coloring& c, const Edge& e,
                                  const Params& p);

/// Checks a total coloring; returns the first violation found, scanning in
/// deterministic edge order. Partial colorings are a usage error.
std::optional<Violation> verify_strong(const Graph& g, const Coloring& c);

/// Like verify_strong but tolerates uncolored edges; used by the reducer's
/// debug re-verification and by trace replay.
std::optional<Violation> find_violation_partial(const Graph& g, const Coloring& c);

/// Greedy baseline: colors each edge of `order` with the least color absent
/// from its colored conflict set. Uses at most 2*Delta*(Delta-1)+1 colors.
Coloring greedy_color(const Graph& g, const std::vector<Edge>& order);

/// Exchanges the colors of two colored edges. No validity check: callers own
/// the proof obligation and must re-verify.
void swap_colors(Coloring& c, const Edge& e1, const Edge& e2);

} // namespace strongedge
