#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "graphyps.h"

namespace {

struct GraphHandle {
    gy_graph* g = nullptr;
    ~GraphHandle() { gy_graph_free(g); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { gy_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

} // namespace

TEST_CASE("graph round trip through the C surface") {
    GraphHandle g;
    REQUIRE(gy_graph_from_json("{\"vertices\":3,\"edges\":[[0,1],[1,2],[2,0]]}", &g.g) == GY_OK);
    CHECK(gy_graph_vertices(g.g) == 3);
    CHECK(gy_graph_edges(g.g) == 3);
    int b = -1;
    CHECK(gy_betti(g.g, &b) == GY_OK);
    CHECK(b == 1);
    StringHandle out;
    REQUIRE(gy_graph_to_json(g.g, &out.s) == GY_OK);
    CHECK(out.str() == "{\"edges\":[[0,1],[1,2],[2,0]],\"vertices\":3}");
}

TEST_CASE("parse errors carry a status and a message") {
    gy_graph* g = nullptr;
    CHECK(gy_graph_from_json("{", &g) == GY_ERR_PARSE);
    CHECK(std::strlen(gy_last_error()) > 0);
    CHECK(gy_graph_from_json("{\"vertices\":1,\"edges\":[[0,0]]}", &g) == GY_ERR_PARSE);
}

TEST_CASE("families through the C surface") {
    GraphHandle w;
    int p3 = 3;
    REQUIRE(gy_graph_family("ws", &p3, 1, &w.g) == GY_OK);
    CHECK(gy_graph_edges(w.g) == 6);

    GraphHandle z;
    int p5 = 5;
    REQUIRE(gy_graph_family("zigzag", &p5, 1, &z.g) == GY_OK);
    CHECK(gy_graph_edges(z.g) == 10);

    GraphHandle x;
    REQUIRE(gy_graph_family("xx5", nullptr, 0, &x.g) == GY_OK);
    CHECK(gy_graph_vertices(x.g) == 6);

    GraphHandle gz;
    int blocks[2] = {2, 2};
    REQUIRE(gy_graph_family("gzz", blocks, 2, &gz.g) == GY_OK);
    CHECK(gy_graph_edges(gz.g) == 10);

    gy_graph* bad = nullptr;
    CHECK(gy_graph_family("moebius", nullptr, 0, &bad) == GY_ERR_USAGE);
    int p2 = 2;
    CHECK(gy_graph_family("ws", &p2, 1, &bad) == GY_ERR_USAGE);
}

TEST_CASE("both polynomial routes agree byte for byte") {
    GraphHandle z;
    int p5 = 5;
    REQUIRE(gy_graph_family("zz", &p5, 1, &z.g) == GY_OK);
    StringHandle det, trees;
    REQUIRE(gy_psi_json(z.g, 0, 0, &det.s) == GY_OK);
    REQUIRE(gy_psi_json(z.g, 1, 0, &trees.s) == GY_OK);
    CHECK(det.str() == trees.str());
    CHECK(det.str().find("\"vars\":10") != std::string::npos);
}

TEST_CASE("renamed coordinates are available on request") {
    GraphHandle w;
    int p3 = 3;
    REQUIRE(gy_graph_family("ws", &p3, 1, &w.g) == GY_OK);
    StringHandle renamed;
    REQUIRE(gy_psi_json(w.g, 0, 1, &renamed.s) == GY_OK);
    CHECK(renamed.str().find("var_names") != std::string::npos);
    CHECK(renamed.str().find("\"A0\"") != std::string::npos);
}

TEST_CASE("divergence verdicts through the C surface") {
    GraphHandle z;
    int p5 = 5;
    REQUIRE(gy_graph_family("zz", &p5, 1, &z.g) == GY_OK);
    StringHandle verdict;
    REQUIRE(gy_pld_json(z.g, &verdict.s) == GY_OK);
    CHECK(verdict.str() == "{\"pld\":true,\"witness\":null}");
}

TEST_CASE("gluing through the C surface") {
    GraphHandle a, b;
    int p3 = 3;
    REQUIRE(gy_graph_family("ws", &p3, 1, &a.g) == GY_OK);
    REQUIRE(gy_graph_family("ws", &p3, 1, &b.g) == GY_OK);
    gy_graph* glued = nullptr;
    int simple = 0;
    REQUIRE(gy_glue(a.g, 3, b.g, 4, 0, &glued, &simple) == GY_OK);
    CHECK(simple == 1);
    CHECK(gy_graph_edges(glued) == 10);
    gy_graph_free(glued);
}

TEST_CASE("counting through the C surface") {
    GraphHandle w;
    int p3 = 3;
    REQUIRE(gy_graph_family("ws", &p3, 1, &w.g) == GY_OK);
    uint32_t primes[2] = {2, 3};
    StringHandle out;
    REQUIRE(gy_count_json(w.g, primes, 2, 0, 0, 1, 0, 0, &out.s) == GY_OK);
    CHECK(out.str().find("\"projective_points\":35") != std::string::npos);
    CHECK(out.str().find("\"projective_points\":130") != std::string::npos);
    CHECK(out.str().find("wall_seconds") == std::string::npos);
}

TEST_CASE("period estimates and refusals through the C surface") {
    GraphHandle w;
    int p3 = 3;
    REQUIRE(gy_graph_family("ws", &p3, 1, &w.g) == GY_OK);
    StringHandle est;
    REQUIRE(gy_period_json(w.g, 10000, 1, -1, 1, &est.s) == GY_OK);
    CHECK(est.str().find("\"mean\":") != std::string::npos);

    GraphHandle tri;
    REQUIRE(gy_graph_from_json("{\"vertices\":3,\"edges\":[[0,1],[1,2],[2,0]]}", &tri.g) == GY_OK);
    StringHandle refusal;
    CHECK(gy_period_json(tri.g, 1000, 1, -1, 1, &refusal.s) == GY_ERR_DOMAIN);
    CHECK(refusal.str().find("ConvergenceRefused") != std::string::npos);
}

TEST_CASE("identities selftest through the C surface") {
    StringHandle out;
    REQUIRE(gy_identities_selftest_json(2, 3, 3, 5, &out.s) == GY_OK);
    CHECK(out.str().find("\"pass\":true") != std::string::npos);
}

TEST_CASE("classification through the C surface") {
    StringHandle out;
    REQUIRE(gy_classify_json(3, 0, 1, &out.s) == GY_OK);
    CHECK(out.str().find("\"family\":\"WS3\"") != std::string::npos);
    CHECK(gy_classify_json(6, 0, 1, &out.s) == GY_ERR_USAGE);
}
