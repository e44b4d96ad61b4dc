#include "graphyps/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

namespace graphyps {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

constexpr int kSubsetEdgeLimit = 20;
constexpr int kCanonicalVertexLimit = 12;

} // namespace

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edge_list)
    : vertex_count(vertices), edges(std::move(edge_list)) {
    if (vertex_count < 0) fail(Error::Kind::Usage, "negative vertex count");
    for (auto [t, h] : edges) {
        if (t < 0 || h < 0 || t >= vertex_count || h >= vertex_count)
            fail(Error::Kind::Usage, "edge endpoint out of range");
        if (t == h) fail(Error::Kind::Usage, "self-loops are not representable");
    }
}

bool Graph::is_simple() const {
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [t, h] : edges) norm.emplace_back(std::min(t, h), std::max(t, h));
    std::sort(norm.begin(), norm.end());
    return std::adjacent_find(norm.begin(), norm.end()) == norm.end();
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(vertex_count, 0);
    for (auto [t, h] : edges) { d[t]++; d[h]++; }
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    auto d = degrees();
    std::sort(d.rbegin(), d.rend());
    return d;
}

int connected_components(const Graph& g) {
    Dsu dsu(g.vertex_count);
    int comps = g.vertex_count;
    for (auto [t, h] : g.edges)
        if (dsu.unite(t, h)) --comps;
    return comps;
}

bool is_connected(const Graph& g) {
    return g.vertex_count <= 1 || connected_components(g) == 1;
}

int betti(const Graph& g) {
    return g.edge_count() - g.vertex_count + connected_components(g);
}

int edge_sign(const Graph& g, int edge, int vertex) {
    auto [t, h] = g.edges.at(edge);
    if (t == vertex) return 1;
    if (h == vertex) return -1;
    return 0;
}

bool LoopTable::valid_for(const Graph& g) const {
    if (int(loop_count()) != betti(g)) return false;
    for (const auto& row : rows) {
        if (int(row.size()) != g.edge_count()) return false;
        std::vector<int> boundary(g.vertex_count, 0);
        bool nonzero = false;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (row[e] == 0) continue;
            if (row[e] != 1 && row[e] != -1) return false;
            nonzero = true;
            boundary[g.edges[e].first] += row[e];
            boundary[g.edges[e].second] -= row[e];
        }
        if (!nonzero) return false;
        if (std::any_of(boundary.begin(), boundary.end(), [](int x) { return x != 0; }))
            return false;
    }
    return true;
}

namespace {

// Fundamental cycles of a given spanning tree; shared by the BFS and the
// random-tree entry points.
LoopTable fundamental_cycles(const Graph& g, const std::vector<int>& tree_edges) {
    int n = g.vertex_count;
    std::vector<char> in_tree(g.edge_count(), 0);
    for (int e : tree_edges) in_tree.at(e) = 1;

    // parent structure of the tree, rooted per component at the smallest vertex
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge)
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_tree[e]) continue;
        auto [t, h] = g.edges[e];
        adj[t].push_back({h, e});
        adj[h].push_back({t, e});
    }
    std::vector<char> seen(n, 0);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front(); q.pop();
            for (auto [w, e] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                parent_edge[w] = e;
                depth[w] = depth[v] + 1;
                q.push(w);
            }
        }
    }

    LoopTable table;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[e]) continue;
        auto [t, h] = g.edges[e];
        // Trace from min(t,h) to max(t,h) through the non-tree edge, then back
        // along the tree path. The direction depends only on the endpoint pair.
        int a = std::min(t, h), b = std::max(t, h);
        std::vector<int8_t> row(g.edge_count(), 0);
        row[e] = int8_t(t == a ? 1 : -1);
        // walk b up to a's level and vice versa, recording tree edges
        int x = b, y = a;
        auto step = [&](int v, int toward_root_sign) {
            int pe = parent_edge[v];
            int p = parent[v];
            // traversal direction: from v to p when toward_root_sign=+1
            int dir = (g.edges[pe].first == v) ? 1 : -1;
            row[pe] = int8_t(toward_root_sign * dir);
            return p;
        };
        while (depth[x] > depth[y]) x = step(x, +1);   // b-side walks toward root
        while (depth[y] > depth[x]) y = step(y, -1);   // a-side edges are traversed downward
        while (x != y) {
            x = step(x, +1);
            y = step(y, -1);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<int> bfs_tree_edges(const Graph& g) {
    int n = g.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [t, h] = g.edges[e];
        adj[t].push_back({h, e});
        adj[h].push_back({t, e});
    }
    std::vector<char> seen(n, 0);
    std::vector<int> tree;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front(); q.pop();
            for (auto [w, e] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                tree.push_back(e);
                q.push(w);
            }
        }
    }
    return tree;
}

} // namespace

LoopTable cycle_basis(const Graph& g) {
    if (!is_connected(g)) fail(Error::Kind::Domain, "cycle basis requires a connected graph");
    return fundamental_cycles(g, bfs_tree_edges(g));
}

LoopTable cycle_basis_from_tree(const Graph& g, const std::vector<int>& tree_edges) {
    Dsu dsu(g.vertex_count);
    for (int e : tree_edges)
        if (!dsu.unite(g.edges.at(e).first, g.edges.at(e).second))
            fail(Error::Kind::Usage, "given edge set is not a forest");
    if (int(tree_edges.size()) != g.vertex_count - connected_components(g))
        fail(Error::Kind::Usage, "given edge set is not spanning");
    return fundamental_cycles(g, tree_edges);
}

LoopTable short_cycle_basis(const Graph& g) {
    if (!is_connected(g)) fail(Error::Kind::Domain, "cycle basis requires a connected graph");
    int m = g.edge_count();
    if (m > 32) fail(Error::Kind::Bound, "short cycle basis limited to 32 edges");
    int h = betti(g);
    LoopTable table;
    if (h == 0) return table;

    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (int e = 0; e < m; ++e) {
        auto [t, hd] = g.edges[e];
        adj[t].push_back({hd, e});
        adj[hd].push_back({t, e});
    }

    // candidate simple cycles as edge masks, shortest first; BFS trees from
    // every root combined with every non-tree edge cover a minimum basis
    std::vector<uint64_t> candidates;
    for (int root = 0; root < g.vertex_count; ++root) {
        std::vector<int> parent_edge(g.vertex_count, -1), depth(g.vertex_count, -1);
        std::vector<int> order;
        depth[root] = 0;
        order.push_back(root);
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
            int v = order[qi];
            for (auto [w, e] : adj[v]) {
                if (depth[w] >= 0) continue;
                depth[w] = depth[v] + 1;
                parent_edge[w] = e;
                order.push_back(w);
            }
        }
        for (int e = 0; e < m; ++e) {
            auto [a, b] = g.edges[e];
            uint64_t mask = uint64_t(1) << e;
            int x = a, y = b;
            bool simple = true;
            while (x != y) {
                int* deeper = (depth[x] >= depth[y]) ? &x : &y;
                int pe = parent_edge[*deeper];
                if (pe < 0 || (mask >> pe & 1)) { simple = false; break; }
                mask |= uint64_t(1) << pe;
                auto [t2, h2] = g.edges[pe];
                *deeper = (*deeper == t2) ? h2 : t2;
            }
            if (simple && x == y) candidates.push_back(mask);
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](uint64_t a, uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::sort(candidates.begin(), candidates.end(), [](uint64_t a, uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    // greedy GF(2) independence via a highest-bit-indexed xor basis
    std::array<uint64_t, 64> basis{};
    std::vector<uint64_t> chosen;
    for (uint64_t cand : candidates) {
        uint64_t x = cand;
        for (int b = 63; b >= 0 && x; --b) {
            if (!(x >> b & 1)) continue;
            if (basis[b]) {
                x ^= basis[b];
            } else {
                basis[b] = x;
                break;
            }
        }
        if (x == 0) continue;
        chosen.push_back(cand);
        if (int(chosen.size()) == h) break;
    }
    if (int(chosen.size()) != h)
        fail(Error::Kind::Usage, "cycle candidates did not span the cycle space");

    // orient each chosen simple cycle: walk from its smallest vertex toward
    // the smaller-id incident cycle edge
    for (uint64_t mask : chosen) {
        std::vector<int8_t> row(m, 0);
        int start = g.vertex_count;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) start = std::min({start, g.edges[e].first, g.edges[e].second});
        int v = start, prev_edge = -1;
        do {
            int chosen_e = -1;
            for (int e = 0; e < m; ++e) {
                if (!(mask >> e & 1) || e == prev_edge || row[e] != 0) continue;
                if (g.edges[e].first == v || g.edges[e].second == v) {
                    chosen_e = e;
                    break;
                }
            }
            if (chosen_e < 0) break;
            auto [t2, h2] = g.edges[chosen_e];
            row[chosen_e] = int8_t(t2 == v ? 1 : -1);
            v = (t2 == v) ? h2 : t2;
            prev_edge = chosen_e;
        } while (v != start);
        table.rows.push_back(std::move(row));
    }
    if (!table.valid_for(g))
        fail(Error::Kind::Usage, "short cycle basis construction failed");
    return table;
}

bool edge_set_connected(const Graph& g, EdgeSet s) {
    if (s == 0) return false;
    Dsu dsu(g.vertex_count);
    int verts = 0, merges = 0;
    std::vector<char> used(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!(s >> e & 1)) continue;
        auto [t, h] = g.edges[e];
        if (!used[t]) { used[t] = 1; ++verts; }
        if (!used[h]) { used[h] = 1; ++verts; }
        if (dsu.unite(t, h)) ++merges;
    }
    return merges == verts - 1;
}

int edge_set_vertex_count(const Graph& g, EdgeSet s) {
    std::vector<char> used(g.vertex_count, 0);
    int verts = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!(s >> e & 1)) continue;
        auto [t, h] = g.edges[e];
        if (!used[t]) { used[t] = 1; ++verts; }
        if (!used[h]) { used[h] = 1; ++verts; }
    }
    return verts;
}

int edge_set_betti(const Graph& g, EdgeSet s) {
    Dsu dsu(g.vertex_count);
    int verts = 0, merges = 0, count = 0;
    std::vector<char> used(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!(s >> e & 1)) continue;
        ++count;
        auto [t, h] = g.edges[e];
        if (!used[t]) { used[t] = 1; ++verts; }
        if (!used[h]) { used[h] = 1; ++verts; }
        if (dsu.unite(t, h)) ++merges;
    }
    int comps = verts - merges;
    return count - verts + comps;
}

void for_each_connected_edge_subset(const Graph& g, const std::function<void(EdgeSet)>& fn) {
    int m = g.edge_count();
    if (m > kSubsetEdgeLimit)
        fail(Error::Kind::Bound, "edge subset enumeration limited to 20 edges");
    EdgeSet all = m == 32 ? ~EdgeSet(0) : (EdgeSet(1) << m) - 1;
    for (EdgeSet s = 1; s <= all && s != 0; ++s)
        if (edge_set_connected(g, s)) fn(s);
}

Graph subgraph_from_edges(const Graph& g, EdgeSet s) {
    std::vector<int> remap(g.vertex_count, -1);
    int nv = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        bool touched = false;
        for (int e = 0; e < g.edge_count() && !touched; ++e)
            if ((s >> e & 1) && (g.edges[e].first == v || g.edges[e].second == v)) touched = true;
        if (touched) remap[v] = nv++;
    }
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (s >> e & 1) edges.emplace_back(remap[g.edges[e].first], remap[g.edges[e].second]);
    return Graph(nv, std::move(edges));
}

std::vector<Graph> connected_edge_subgraphs(const Graph& g) {
    std::vector<Graph> out;
    for_each_connected_edge_subset(g, [&](EdgeSet s) { out.push_back(subgraph_from_edges(g, s)); });
    return out;
}

Graph delete_edge(const Graph& g, int edge) {
    if (edge < 0 || edge >= g.edge_count()) fail(Error::Kind::Usage, "edge id out of range");
    auto edges = g.edges;
    edges.erase(edges.begin() + edge);
    return Graph(g.vertex_count, std::move(edges));
}

Graph contract_edge(const Graph& g, int edge) {
    if (edge < 0 || edge >= g.edge_count()) fail(Error::Kind::Usage, "edge id out of range");
    auto [u, v] = g.edges[edge];
    int lo = std::min(u, v), hi = std::max(u, v);
    std::vector<int> remap(g.vertex_count);
    for (int w = 0; w < g.vertex_count; ++w)
        remap[w] = (w == hi) ? lo : (w > hi ? w - 1 : w);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == edge) continue;
        edges.emplace_back(remap[g.edges[e].first], remap[g.edges[e].second]);
    }
    return Graph(g.vertex_count - 1, std::move(edges));
}

namespace {

void spanning_forest_rec(const Graph& g, int edge, int picked, int needed,
                         Dsu& dsu, std::vector<int>& chosen,
                         const std::function<void(const std::vector<int>&)>& fn) {
    if (picked == needed) {
        fn(chosen);
        return;
    }
    if (edge >= g.edge_count()) return;
    // Feasibility: taking all remaining edges must still reach the target size.
    {
        Dsu probe = dsu;
        int extra = 0;
        for (int e = edge; e < g.edge_count(); ++e)
            if (probe.unite(g.edges[e].first, g.edges[e].second)) ++extra;
        if (picked + extra < needed) return;
    }
    auto [t, h] = g.edges[edge];
    if (dsu.find(t) != dsu.find(h)) {
        Dsu saved = dsu;
        dsu.unite(t, h);
        chosen.push_back(edge);
        spanning_forest_rec(g, edge + 1, picked + 1, needed, dsu, chosen, fn);
        chosen.pop_back();
        dsu = saved;
    }
    spanning_forest_rec(g, edge + 1, picked, needed, dsu, chosen, fn);
}

} // namespace

void for_each_spanning_forest(const Graph& g, const std::function<void(const std::vector<int>&)>& fn) {
    int needed = g.vertex_count - connected_components(g);
    Dsu dsu(g.vertex_count);
    std::vector<int> chosen;
    chosen.reserve(needed);
    spanning_forest_rec(g, 0, 0, needed, dsu, chosen, fn);
}

std::vector<std::vector<int>> spanning_trees(const Graph& g) {
    std::vector<std::vector<int>> out;
    for_each_spanning_forest(g, [&](const std::vector<int>& t) { out.push_back(t); });
    return out;
}

std::vector<int> random_spanning_forest(const Graph& g, uint64_t seed) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    uint64_t x = seed + 0x9e3779b97f4a7c15ULL;
    auto next = [&x]() {
        x += 0x9e3779b97f4a7c15ULL;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[next() % i]);
    Dsu dsu(g.vertex_count);
    std::vector<int> tree;
    for (int e : order)
        if (dsu.unite(g.edges[e].first, g.edges[e].second)) tree.push_back(e);
    std::sort(tree.begin(), tree.end());
    return tree;
}

namespace {

struct CanonicalSearch {
    int n;
    std::array<std::array<uint8_t, 12>, 12> adj{};
    std::vector<uint8_t> best;
    std::vector<uint8_t> cur;
    std::array<int, 12> placed{}; // position -> original vertex
    std::array<char, 12> used{};
    bool have_best = false;

    // `tight` tracks whether cur equals the corresponding prefix of best; only
    // then can a larger byte prune the branch. A branch that goes strictly
    // below best keeps running and replaces best on completion, which only
    // ever shrinks best, so a true `tight` in an enclosing frame stays valid.
    void run(int pos, bool tight) {
        if (pos == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::size_t mark = cur.size();
            bool branch_tight = tight;
            bool prune = false;
            for (int i = 0; i < pos; ++i) {
                uint8_t a = adj[placed[i]][v];
                std::size_t k = cur.size();
                cur.push_back(a);
                if (branch_tight && have_best) {
                    if (a > best[k]) { prune = true; break; }
                    if (a < best[k]) branch_tight = false;
                }
            }
            if (!prune) {
                placed[pos] = v;
                used[v] = 1;
                run(pos + 1, branch_tight);
                used[v] = 0;
            }
            cur.resize(mark);
        }
    }
};

} // namespace

std::vector<uint8_t> canonical_key(const Graph& g) {
    if (g.vertex_count > kCanonicalVertexLimit)
        fail(Error::Kind::Bound, "canonical form limited to 12 vertices");
    CanonicalSearch s;
    s.n = g.vertex_count;
    for (auto [t, h] : g.edges) {
        s.adj[t][h]++;
        s.adj[h][t]++;
    }
    if (s.n == 0) return {};
    s.run(0, true);
    return s.best;
}

std::string canonical_key_hex(const Graph& g) {
    auto key = canonical_key(g);
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2 + 8);
    // vertex count prefix keeps keys of different orders distinct
    out += std::to_string(g.vertex_count);
    out += ':';
    for (uint8_t b : key) {
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_key(a) == canonical_key(b);
}

uint64_t graph_fingerprint(const Graph& g) {
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](uint64_t x) {
        h ^= x;
        h *= 0x100000001b3ULL;
    };
    mix(uint64_t(g.vertex_count));
    for (auto [t, hd] : g.edges) {
        mix(uint64_t(t) + 1);
        mix(uint64_t(hd) + 1);
    }
    return h;
}

} // namespace graphyps
