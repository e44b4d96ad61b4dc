#include <doctest.h>

#include <algorithm>

#include "graphyps/divergence.hpp"
#include "graphyps/families.hpp"
#include "oracles.hpp"

using namespace graphyps;

namespace {

Graph from_adjacency(const std::vector<std::vector<int>>& ad) {
    int n = int(ad.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ad[i][j]) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

} // namespace

TEST_CASE("wheel basics") {
    Graph w3 = wheel(3);
    CHECK(w3.vertex_count == 4);
    CHECK(w3.edge_count() == 6);
    CHECK(is_isomorphic(w3, Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));

    Graph w4 = wheel(4);
    CHECK(w4.edge_count() == 8);
    CHECK(betti(w4) == 4);
    CHECK(w4.degree_sequence() == std::vector<int>{4, 3, 3, 3, 3});

    CHECK_THROWS_AS(wheel(2), Error);
}

TEST_CASE("wheel equals the one-block zigzag family") {
    for (int n = 3; n <= 7; ++n) CHECK(is_isomorphic(wheel(n), gzz({n - 1})));
}

TEST_CASE("gzz shapes") {
    Graph g2 = gzz({2});
    CHECK(g2.vertex_count == 4);
    CHECK(g2.edge_count() == 6);
    CHECK(is_isomorphic(g2, wheel(3)));

    CHECK(is_isomorphic(gzz({2, 2}), zigzag(5)));

    Graph big = gzz({3, 2, 3, 4});
    CHECK(big.vertex_count == 14);
    CHECK(big.edge_count() == 26);
    CHECK(betti(big) == 13);

    CHECK_THROWS_AS(gzz({1, 2}), Error);
    CHECK_THROWS_AS(gzz({2, 1}), Error);
    CHECK_THROWS_AS(gzz({}), Error);
}

TEST_CASE("gzz family invariants") {
    for (const auto& l : std::vector<std::vector<int>>{
             {2}, {3}, {4}, {2, 2}, {3, 2}, {2, 3}, {2, 1, 2}, {2, 2, 2}, {2, 1, 1, 2}}) {
        Graph g = gzz(l);
        CHECK(g.is_simple());
        CHECK(is_connected(g));
        CHECK(g.edge_count() == 2 * betti(g));
        auto deg = g.degrees();
        CHECK(*std::min_element(deg.begin(), deg.end()) >= 3);
    }
}

TEST_CASE("zigzag shapes") {
    CHECK(zigzag(5).edge_count() == 10);
    CHECK(betti(zigzag(5)) == 5);
    CHECK_FALSE(is_isomorphic(zigzag(5), wheel(5)));
    CHECK(zigzag(6).edge_count() == 12);
    CHECK(betti(zigzag(6)) == 6);
    for (int n = 5; n <= 7; ++n) {
        std::vector<int> blocks(n - 3, 1);
        blocks.front() = 2;
        blocks.back() = 2;
        CHECK(is_isomorphic(zigzag(n), gzz(blocks)));
    }
    CHECK_THROWS_AS(zigzag(4), Error);
}

TEST_CASE("the two exceptional 10-edge graphs") {
    Graph x = xx5(), s = st5();
    for (const Graph* g : {&x, &s}) {
        CHECK(g->vertex_count == 6);
        CHECK(g->edge_count() == 10);
        CHECK(betti(*g) == 5);
        CHECK(g->degree_sequence() == std::vector<int>{4, 4, 3, 3, 3, 3});
    }
    auto deg4_adjacent = [](const Graph& g) {
        auto deg = g.degrees();
        std::vector<int> four;
        for (int v = 0; v < g.vertex_count; ++v)
            if (deg[v] == 4) four.push_back(v);
        REQUIRE(four.size() == 2);
        for (auto [t, h] : g.edges)
            if ((t == four[0] && h == four[1]) || (t == four[1] && h == four[0])) return true;
        return false;
    };
    CHECK_FALSE(deg4_adjacent(x));
    CHECK(deg4_adjacent(s));
    CHECK_FALSE(is_isomorphic(x, s));

    // adjacency matrices from the classification case analysis
    Graph x_ref = from_adjacency({{0, 0, 1, 1, 1, 1},
                                  {0, 0, 1, 1, 1, 1},
                                  {1, 1, 0, 1, 0, 0},
                                  {1, 1, 1, 0, 0, 0},
                                  {1, 1, 0, 0, 0, 1},
                                  {1, 1, 0, 0, 1, 0}});
    Graph s_ref = from_adjacency({{0, 1, 1, 1, 1, 0},
                                  {1, 0, 1, 1, 1, 0},
                                  {1, 1, 0, 0, 0, 1},
                                  {1, 1, 0, 0, 0, 1},
                                  {1, 1, 0, 0, 0, 1},
                                  {0, 0, 1, 1, 1, 0}});
    CHECK(is_isomorphic(x, x_ref));
    CHECK(is_isomorphic(s, s_ref));
}

TEST_CASE("gluing two wheels along rim edges gives the exceptional graph") {
    Graph w3 = wheel(3);
    // rim edges of wheel(3) are ids 3,4,5
    for (int e1 = 3; e1 < 6; ++e1) {
        for (int e2 = 3; e2 < 6; ++e2) {
            GlueResult r = glue(w3, e1, w3, e2);
            CHECK(r.simple);
            CHECK(r.graph.edge_count() == 10);
            CHECK(betti(r.graph) == 5);
            CHECK(is_isomorphic(r.graph, xx5()));
        }
    }
}

TEST_CASE("gluing edge count arithmetic") {
    GlueResult r = glue(wheel(4), 6, wheel(5), 7);
    CHECK(r.graph.edge_count() == wheel(4).edge_count() + wheel(5).edge_count() - 2);
    CHECK(betti(r.graph) == 4 + 5 - 1);
}

TEST_CASE("gluing triangles gives the 4-cycle") {
    GlueResult r = glue(triangle(), 0, triangle(), 0);
    CHECK(r.graph.edge_count() == 4);
    CHECK(betti(r.graph) == 1);
    CHECK(is_isomorphic(r.graph, Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
}

TEST_CASE("gluing is symmetric up to isomorphism") {
    GlueResult a = glue(wheel(3), 4, zigzag(5), 2);
    GlueResult b = glue(zigzag(5), 2, wheel(3), 4);
    CHECK(is_isomorphic(a.graph, b.graph));
}

TEST_CASE("cross matching preserves the gluing arithmetic") {
    GlueResult straight = glue(zigzag(5), 0, wheel(4), 2, false);
    GlueResult crossed = glue(zigzag(5), 0, wheel(4), 2, true);
    CHECK(straight.graph.edge_count() == crossed.graph.edge_count());
    CHECK(betti(straight.graph) == betti(crossed.graph));
}

TEST_CASE("gluing reports created parallel pairs") {
    // both inputs keep a second parallel copy of the dropped edge
    Graph doubled(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
    GlueResult r = glue(doubled, 0, doubled, 0);
    CHECK_FALSE(r.simple);
    CHECK(r.graph.edge_count() == 6);
}

TEST_CASE("glue rejects bad edge ids") {
    CHECK_THROWS_AS(glue(triangle(), 3, triangle(), 0), Error);
}
