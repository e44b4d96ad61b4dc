#ifndef GRAPHYPS_DIVERGENCE_HPP
#define GRAPHYPS_DIVERGENCE_HPP

#include <optional>
#include <vector>

#include "graphyps/graph.hpp"

namespace graphyps {

// N > 2*h1: convergent; N == 2*h1: logarithmically divergent; N < 2*h1 has no
// name in the source material and only shows up in witness reporting.
enum class DivergenceClass { Convergent, LogDivergent, Superdivergent };

DivergenceClass divergence_class(const Graph& g);
DivergenceClass edge_set_divergence_class(const Graph& g, EdgeSet s);

struct PldResult {
    bool pld = false;
    enum class Reason { None, Disconnected, NotLogDivergent, DivergentSubgraph };
    Reason reason = Reason::None;
    std::optional<EdgeSet> witness_edges; // connected proper non-convergent subgraph
    std::optional<Graph> witness;
};

// Connected, logarithmically divergent, and every connected proper
// edge-subgraph convergent. Fast necessary condition: minimum degree >= 3.
// Requires |E| <= 20.
PldResult is_pld(const Graph& g);

// All primitively log divergent simple connected graphs with 2n edges, up to
// isomorphism, sorted by canonical key. Vertex counts run over
// n+1..floor(4n/3); min_vertices overrides the lower end (used to confirm no
// classes hide below). n in {3,4,5}; n == 6 only with `experimental`.
std::vector<Graph> classify_pld(int loops, bool experimental = false, int threads = 1,
                                int min_vertices = -1);

// Both inputs must be primitively log divergent; returns true iff every glued
// graph over the given (edge of g1, edge of g2) pairs is too.
bool verify_gluing_closure(const Graph& g1, const Graph& g2,
                           const std::vector<std::pair<int, int>>& edge_pairs);

} // namespace graphyps

#endif
