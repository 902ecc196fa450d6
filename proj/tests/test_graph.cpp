#include <doctest.h>

#include "strongedge/errors.hpp"
#include "strongedge/gen.hpp"
#include "strongedge/graph.hpp"
#include "strongedge/structure.hpp"
#include "testutil.hpp"

using namespace strongedge;
using testutil::make_graph;

TEST_CASE("build_graph basics") {
    SUBCASE("path from edge list") {
        auto g = make_graph({{0, 1}, {1, 2}});
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.max_degree() == 2);
    }
    SUBCASE("duplicate edges merge") {
        auto g = make_graph({{0, 1}, {0, 1}, {1, 0}});
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("self-loop rejected") {
        std::vector<std::pair<VertexId, VertexId>> e{{2, 2}};
        CHECK_THROWS_AS(Graph::from_edges(e), InputError);
    }
    SUBCASE("isolated vertices kept") {
        auto g = make_graph({{0, 1}}, {5});
        CHECK(g.has_vertex(5));
        CHECK(g.degree(5) == 0);
        CHECK(g.vertex_count() == 3);
    }
}

TEST_CASE("mutation keeps unrelated identities stable") {
    auto g = make_graph({{0, 1}, {1, 2}, {2, 3}});
    g.remove_edge(1, 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK_THROWS_AS(g.remove_edge(1, 2), UsageError);
    CHECK_THROWS_AS(g.remove_vertex(0), UsageError); // not isolated
    VertexId fresh = g.add_vertex();
    CHECK(fresh == 4);
    g.add_edge(fresh, 0);
    CHECK(g.degree(0) == 2);
}

TEST_CASE("degeneracy fixtures") {
    CHECK(degeneracy(gen_named(NamedKind::Cycle, 5)).k == 2);
    CHECK(degeneracy(gen_named(NamedKind::Path, 4)).k == 1);
    CHECK(degeneracy(make_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})).k == 3);
    CHECK(degeneracy(gen_named(NamedKind::K2n, 3)).k == 2);
    CHECK(degeneracy(Graph{}).k == 0);
}

TEST_CASE("is_two_degenerate fixtures") {
    CHECK_FALSE(is_two_degenerate(
        make_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))); // K4
    CHECK(is_two_degenerate(gen_named(NamedKind::K2n, 3)));
    CHECK(is_two_degenerate(Graph{}));
}

TEST_CASE("degeneracy order witnesses k") {
    // Replaying the elimination order must never expose a vertex with more
    // than k neighbors among later-removed vertices.
    SplitMix64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(15));
        int mmax = n * (n - 1) / 2;
        auto g = testutil::random_graph(n, static_cast<int>(rng.below(mmax + 1)), rng);
        auto res = degeneracy(g);
        REQUIRE(res.order.size() == g.vertex_count());
        std::set<VertexId> later(res.order.begin(), res.order.end());
        for (auto v : res.order) {
            later.erase(v);
            int cnt = 0;
            for (auto w : g.neighbors(v))
                if (later.count(w)) ++cnt;
            CHECK(cnt <= res.k);
        }
    }
}

TEST_CASE("n2_edges fixtures") {
    SUBCASE("P5 middle edge") {
        auto g = gen_named(NamedKind::Path, 5); // 0-1-2-3-4
        auto n2 = n2_edges(g, Edge(1, 2));
        CHECK(n2 == std::vector<Edge>{Edge(0, 1), Edge(2, 3), Edge(3, 4)});
    }
    SUBCASE("single edge") {
        auto g = make_graph({{0, 1}});
        CHECK(n2_edges(g, Edge(0, 1)).empty());
    }
    SUBCASE("C5 is all-conflicting") {
        auto g = gen_named(NamedKind::Cycle, 5);
        CHECK(n2_edges(g, Edge(0, 1)).size() == 4);
    }
    SUBCASE("missing edge is an input error") {
        auto g = make_graph({{0, 1}});
        CHECK_THROWS_AS(n2_edges(g, Edge(0, 2)), InputError);
    }
}

TEST_CASE("n2_edges equals the definition scan on random graphs") {
    SplitMix64 rng(7);
    int samples = 0;
    while (samples < 1000) {
        int n = 3 + static_cast<int>(rng.below(12));
        int mmax = n * (n - 1) / 2;
        auto g = testutil::random_graph(n, 1 + static_cast<int>(rng.below(mmax)), rng);
        auto edges = g.edges();
        if (edges.empty()) continue;
        const auto& e = edges[rng.below(edges.size())];
        CHECK(n2_edges(g, e) == testutil::brute_n2(g, e));
        ++samples;
    }
}
