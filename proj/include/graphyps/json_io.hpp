#ifndef GRAPHYPS_JSON_IO_HPP
#define GRAPHYPS_JSON_IO_HPP

#include <string>

#include "graphyps/graph.hpp"
#include "graphyps/mpoly.hpp"
#include "graphyps/period.hpp"
#include "graphyps/pointcount.hpp"

namespace graphyps {

// Graph interchange: {"edges": [[tail,head],...], "vertices": m}, 0-based;
// edge list order defines edge ids. All documents are emitted with sorted
// keys and canonical term order so equal values are byte-identical.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Polynomial: {"terms": [{"coef": c, "exps": [...]}], "vars": N}, terms in
// the canonical (ascending lexicographic) order.
std::string poly_to_json(const MPoly& p);
std::string poly_to_json(const MPoly& p, const std::vector<std::string>& var_names);
MPoly poly_from_json(const std::string& text);

std::string record_to_json(const PointCountRecord& r, bool with_timing);
std::string estimate_to_json(const PeriodEstimate& e);

} // namespace graphyps

#endif
