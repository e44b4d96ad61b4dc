#include "graphyps/families.hpp"

#include <numeric>

namespace graphyps {

Graph wheel(int n) {
    if (n < 3) fail(Error::Kind::Usage, "wheel needs at least 3 spokes");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * n);
    for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    return Graph(n + 1, std::move(edges));
}

Graph gzz(const std::vector<int>& l) {
    int t = int(l.size());
    if (t < 1) fail(Error::Kind::Usage, "gzz needs at least one block");
    for (int li : l)
        if (li < 1) fail(Error::Kind::Usage, "gzz block sizes must be positive");
    if (l.front() < 2 || l.back() < 2)
        fail(Error::Kind::Usage, "gzz requires the first and last block size >= 2");

    // vertices: u_1..u_{t+2} are 0..t+1, fan vertices v_{i,j} follow
    int nv = t + 2;
    std::vector<std::vector<int>> fan(t);
    for (int i = 0; i < t; ++i)
        for (int j = 1; j < l[i]; ++j) fan[i].push_back(nv++);

    int n = 1 + std::accumulate(l.begin(), l.end(), 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * n);

    auto u = [](int i) { return i - 1; }; // u_i, 1-based
    // First batch: per block the path edge (u_i,u_{i+1}) then the fan edges at
    // u_{i+1}; odd blocks point toward u_{i+1}'s predecessor, even away.
    for (int i = 1; i <= t; ++i) {
        bool odd = (i % 2 == 1);
        if (odd) edges.emplace_back(u(i + 1), u(i));
        else edges.emplace_back(u(i), u(i + 1));
        for (int j = 2; j <= l[i - 1]; ++j) {
            int v = fan[i - 1][j - 2];
            if (odd) edges.emplace_back(u(i + 1), v);
            else edges.emplace_back(v, u(i + 1));
        }
    }
    if (t % 2 == 0) edges.emplace_back(u(t + 2), u(t + 1));
    else edges.emplace_back(u(t + 1), u(t + 2));
    // Second batch: the chain u_i, v_{i,1}, ..., v_{i,l_i-1}, u_{i+2} with each
    // edge oriented from the later chain vertex to the earlier one.
    for (int i = 1; i <= t; ++i) {
        std::vector<int> chain;
        chain.push_back(u(i));
        for (int v : fan[i - 1]) chain.push_back(v);
        chain.push_back(u(i + 2));
        for (std::size_t j = 1; j < chain.size(); ++j)
            edges.emplace_back(chain[j], chain[j - 1]);
    }
    edges.emplace_back(u(1), u(t + 2));
    return Graph(nv, std::move(edges));
}

Graph zigzag(int n) {
    if (n < 5) fail(Error::Kind::Usage, "zigzag needs betti number >= 5");
    std::vector<std::pair<int, int>> edges(2 * n, {0, 0});
    for (int k = 1; k <= n; ++k) edges[2 * k - 2] = {k - 1, k};
    for (int k = 1; k <= n - 1; ++k) edges[2 * k - 1] = {k + 1, k - 1};
    edges[2 * n - 1] = {n, 0};
    return Graph(n + 1, std::move(edges));
}

Graph xx5() {
    return Graph(6, {{1, 0}, {0, 4}, {4, 1}, {0, 2}, {2, 4},
                     {5, 2}, {2, 3}, {3, 5}, {3, 1}, {1, 5}});
}

Graph st5() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                     {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
}

GlueResult glue(const Graph& g1, int e1, const Graph& g2, int e2, bool cross) {
    if (e1 < 0 || e1 >= g1.edge_count() || e2 < 0 || e2 >= g2.edge_count())
        fail(Error::Kind::Usage, "edge id out of range");
    auto [u1, v1] = g1.edges[e1];
    auto [u2, v2] = g2.edges[e2];
    if (cross) std::swap(u2, v2);

    std::vector<int> remap(g2.vertex_count, -1);
    remap[u2] = u1;
    remap[v2] = v1;
    int next = g1.vertex_count;
    for (int w = 0; w < g2.vertex_count; ++w)
        if (remap[w] < 0) remap[w] = next++;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(g1.edge_count() + g2.edge_count() - 2);
    for (int e = 0; e < g1.edge_count(); ++e)
        if (e != e1) edges.push_back(g1.edges[e]);
    for (int e = 0; e < g2.edge_count(); ++e)
        if (e != e2) edges.emplace_back(remap[g2.edges[e].first], remap[g2.edges[e].second]);

    Graph out(next, std::move(edges));
    bool simple = out.is_simple();
    return GlueResult{std::move(out), simple};
}

} // namespace graphyps
