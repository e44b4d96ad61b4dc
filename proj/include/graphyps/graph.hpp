#ifndef GRAPHYPS_GRAPH_HPP
#define GRAPHYPS_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphyps/error.hpp"

namespace graphyps {

// Oriented graph with numbered edges. Edge ids are positions in `edges`;
// orientation is tail -> head. Self-loops are rejected; parallel edges are
// allowed so that gluing intermediates stay representable (full simplicity is
// enforced by the family constructors and the classifier).
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // (tail, head)

    Graph() = default;
    Graph(int vertices, std::vector<std::pair<int, int>> edge_list);

    int edge_count() const { return int(edges.size()); }
    bool is_simple() const; // no parallel edges (self-loops are impossible)
    std::vector<int> degrees() const;
    std::vector<int> degree_sequence() const; // sorted descending
};

int connected_components(const Graph& g);
bool is_connected(const Graph& g);
// |E| - |V| + #components = rank of the first homology.
int betti(const Graph& g);

// Sign convention: +1 if the edge exits the vertex, -1 if it enters.
int edge_sign(const Graph& g, int edge, int vertex);

// One row per basis loop, one column per edge; entries in {-1,0,+1} give the
// tracing direction of each edge in the loop.
struct LoopTable {
    std::vector<std::vector<int8_t>> rows;

    std::size_t loop_count() const { return rows.size(); }
    std::size_t edge_count() const { return rows.empty() ? 0 : rows[0].size(); }
    // Every row must lie in the kernel of the boundary map and the row count
    // must equal betti(g).
    bool valid_for(const Graph& g) const;
};

// Fundamental cycles of a breadth-first spanning tree. BFS keeps loops short.
// The tracing direction of each loop is fixed by the endpoints of its defining
// non-tree edge (low vertex to high vertex), not by the edge's orientation, so
// flipping one edge orientation changes table entries only in that edge's
// column. Rejects disconnected input.
LoopTable cycle_basis(const Graph& g);
// Fundamental cycles of a caller-provided spanning tree (edge ids).
LoopTable cycle_basis_from_tree(const Graph& g, const std::vector<int>& tree_edges);

// Greedy minimum-length cycle basis (simple cycles, shortest first, kept when
// independent over GF(2)). Short loops concentrate the graph matrix near the
// diagonal, which the renamed-coordinates report relies on. Connected input,
// |E| <= 32.
LoopTable short_cycle_basis(const Graph& g);

using EdgeSet = uint32_t; // bitmask over edge ids; ops below require |E| <= 20

bool edge_set_connected(const Graph& g, EdgeSet s);
int edge_set_vertex_count(const Graph& g, EdgeSet s);
int edge_set_betti(const Graph& g, EdgeSet s);

// Every nonempty edge subset inducing a connected subgraph, exactly once.
void for_each_connected_edge_subset(const Graph& g, const std::function<void(EdgeSet)>& fn);
std::vector<Graph> connected_edge_subgraphs(const Graph& g);

// Subgraph on an edge subset; vertices are the endpoints of the chosen edges,
// renumbered in increasing order of original id. Edge order is preserved.
Graph subgraph_from_edges(const Graph& g, EdgeSet s);
Graph delete_edge(const Graph& g, int edge);
// Identifies the endpoints of `edge` and drops it; other edges keep their
// relative order. May create parallel edges.
Graph contract_edge(const Graph& g, int edge);

// Spanning trees; for disconnected input, spanning forests restricting to a
// spanning tree on each component (a graph whose components are all single
// vertices yields one empty forest).
void for_each_spanning_forest(const Graph& g, const std::function<void(const std::vector<int>&)>& fn);
std::vector<std::vector<int>> spanning_trees(const Graph& g);
// Union-find built from edges in a seeded random order.
std::vector<int> random_spanning_forest(const Graph& g, uint64_t seed);

// Lexicographically minimal adjacency string over all vertex permutations
// (upper triangle, column by column); equal keys iff isomorphic as undirected
// graphs. Requires vertex_count <= 12.
std::vector<uint8_t> canonical_key(const Graph& g);
std::string canonical_key_hex(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Stable identity of the labeled input (not isomorphism-invariant); used to
// tag records emitted for a given graph.
uint64_t graph_fingerprint(const Graph& g);

} // namespace graphyps

#endif
