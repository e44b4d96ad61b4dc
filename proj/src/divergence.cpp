#include "graphyps/divergence.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <thread>

#include "graphyps/families.hpp"

namespace graphyps {

DivergenceClass divergence_class(const Graph& g) {
    int n = g.edge_count();
    int h = betti(g);
    if (n > 2 * h) return DivergenceClass::Convergent;
    if (n == 2 * h) return DivergenceClass::LogDivergent;
    return DivergenceClass::Superdivergent;
}

DivergenceClass edge_set_divergence_class(const Graph& g, EdgeSet s) {
    int n = std::popcount(s);
    int h = edge_set_betti(g, s);
    if (n > 2 * h) return DivergenceClass::Convergent;
    if (n == 2 * h) return DivergenceClass::LogDivergent;
    return DivergenceClass::Superdivergent;
}

PldResult is_pld(const Graph& g) {
    int m = g.edge_count();
    if (m > 20) fail(Error::Kind::Bound, "subgraph scan limited to 20 edges");

    PldResult r;
    if (!is_connected(g)) {
        r.reason = PldResult::Reason::Disconnected;
        return r;
    }
    if (divergence_class(g) != DivergenceClass::LogDivergent) {
        r.reason = PldResult::Reason::NotLogDivergent;
        return r;
    }
    // A vertex of degree <= 2 always yields a non-convergent connected proper
    // subgraph, so the scan below is guaranteed to produce a witness; callers
    // that only need the verdict can use the degree test as a prefilter.
    EdgeSet all = (EdgeSet(1) << m) - 1;
    // Scan proper subsets by decreasing size. A violating disconnected
    // subgraph always contains a violating component, so connected subsets
    // suffice.
    for (int size = m - 1; size >= 1; --size) {
        EdgeSet s = (EdgeSet(1) << size) - 1;
        while (s <= all) {
            if (edge_set_connected(g, s) &&
                edge_set_divergence_class(g, s) != DivergenceClass::Convergent) {
                r.reason = PldResult::Reason::DivergentSubgraph;
                r.witness_edges = s;
                r.witness = subgraph_from_edges(g, s);
                return r;
            }
            EdgeSet c = s & (~s + 1);
            EdgeSet next = s + c;
            if (next == 0) break;
            s = (((next ^ s) >> 2) / c) | next;
        }
    }
    r.pld = true;
    r.reason = PldResult::Reason::None;
    return r;
}

namespace {

// All 2n-edge subsets of the complete graph on m vertices, filtered down to
// primitively log divergent graphs; adds canonical representatives to `out`.
void enumerate_candidates(int m, int n,
                          std::map<std::vector<uint8_t>, Graph>& out) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    int np = int(pairs.size());
    int ne = 2 * n;
    if (np < ne) return;

    std::vector<int> pick(ne);
    for (int i = 0; i < ne; ++i) pick[i] = i;
    std::vector<int> deg(m);
    while (true) {
        std::fill(deg.begin(), deg.end(), 0);
        for (int p : pick) {
            deg[pairs[p].first]++;
            deg[pairs[p].second]++;
        }
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d >= 3; })) {
            std::vector<std::pair<int, int>> edges;
            edges.reserve(ne);
            for (int p : pick) edges.push_back(pairs[p]);
            Graph g(m, std::move(edges));
            if (is_connected(g) && betti(g) == n && is_pld(g).pld) {
                auto key = canonical_key(g);
                out.emplace(std::move(key), std::move(g));
            }
        }
        // next combination
        int i = ne - 1;
        while (i >= 0 && pick[i] == np - ne + i) --i;
        if (i < 0) break;
        pick[i]++;
        for (int j = i + 1; j < ne; ++j) pick[j] = pick[j - 1] + 1;
    }
}

} // namespace

std::vector<Graph> classify_pld(int loops, bool experimental, int threads, int min_vertices) {
    int n = loops;
    if (n < 3 || n > 6 || (n == 6 && !experimental))
        fail(Error::Kind::Usage, "classification covers 3..5 loops (6 behind the experimental flag)");
    int m_lo = (min_vertices > 0) ? min_vertices : n + 1;
    int m_hi = (4 * n) / 3;

    std::vector<int> ms;
    for (int m = m_lo; m <= m_hi; ++m) ms.push_back(m);

    std::vector<std::map<std::vector<uint8_t>, Graph>> partial(ms.size());
    if (threads > 1 && ms.size() > 1) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= ms.size()) return;
                enumerate_candidates(ms[i], n, partial[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < ms.size(); ++i) enumerate_candidates(ms[i], n, partial[i]);
    }

    std::map<std::vector<uint8_t>, Graph> classes;
    for (auto& p : partial)
        for (auto& [k, g] : p) classes.emplace(k, g);
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [k, g] : classes) out.push_back(g);
    return out;
}

bool verify_gluing_closure(const Graph& g1, const Graph& g2,
                           const std::vector<std::pair<int, int>>& edge_pairs) {
    if (!is_pld(g1).pld || !is_pld(g2).pld)
        fail(Error::Kind::Domain, "gluing closure requires primitively log divergent inputs");
    for (auto [e1, e2] : edge_pairs) {
        GlueResult glued = glue(g1, e1, g2, e2);
        if (!is_pld(glued.graph).pld) return false;
    }
    return true;
}

} // namespace graphyps
