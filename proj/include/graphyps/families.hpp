#ifndef GRAPHYPS_FAMILIES_HPP
#define GRAPHYPS_FAMILIES_HPP

#include <vector>

#include "graphyps/graph.hpp"

namespace graphyps {

// Wheel with n spokes: hub 0 plus rim 1..n. Spokes come first (oriented out of
// the hub), then rim edges oriented v_i -> v_{i+1}.
Graph wheel(int n); // n >= 3

// Generalized zigzag on the block sizes l = (l_1,...,l_t); requires l_1 >= 2
// and l_t >= 2 (for t = 1 the single entry must be >= 2). n = 1 + sum(l);
// the graph has n+1 vertices and 2n edges.
Graph gzz(const std::vector<int>& l);

// Zigzag with betti number n (n >= 5): a path p_1..p_{n+1} with chords
// (p_{k+2}, p_k) and a closing edge; isomorphic to gzz([2,1,...,1,2]).
Graph zigzag(int n);

// The two exceptional 10-edge graphs on 6 vertices with degree sequence
// (4,4,3,3,3,3): xx5 has its degree-4 vertices non-adjacent, st5 adjacent.
Graph xx5();
Graph st5();

struct GlueResult {
    Graph graph;
    bool simple; // false when the identification produced a parallel pair
};

// Drop edge e1 of g1 and e2 of g2, then identify tail(e1) with tail(e2) and
// head(e1) with head(e2); `cross` swaps the identification to tail-head.
// g1's vertex ids are preserved; g2's surviving vertices are appended.
GlueResult glue(const Graph& g1, int e1, const Graph& g2, int e2, bool cross = false);

} // namespace graphyps

#endif
