#ifndef GRAPHYPS_PERIOD_HPP
#define GRAPHYPS_PERIOD_HPP

#include <cstdint>
#include <optional>

#include "graphyps/error.hpp"
#include "graphyps/graph.hpp"

namespace graphyps {

// Thrown when a period is requested for a graph whose parametric integral
// diverges (anything not primitively log divergent); carries the divergent
// subgraph when one exists.
class ConvergenceRefused : public Error {
public:
    ConvergenceRefused(std::string msg, std::optional<Graph> witness)
        : Error(Error::Kind::Domain, std::move(msg)), witness_(std::move(witness)) {}
    const std::optional<Graph>& witness() const { return witness_; }

private:
    std::optional<Graph> witness_;
};

struct PeriodEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    unsigned long long samples = 0;
    unsigned long long rejected = 0; // non-finite weights, counted and reported
    uint64_t seed = 0;
    uint64_t graph_fingerprint = 0;
    int chart = 0; // edge variable fixed to 1
};

// Monte Carlo estimate of the projective period integral in the affine chart
// A_chart = 1: the integral over the positive orthant of dA / psi(A)^2,
// sampled through A = u/(1-u) per coordinate with the matching Jacobian
// weight. Refuses graphs that are not primitively log divergent. Fixed batch
// substreams derived from (seed, batch index) make the result bit-identical
// for any thread count. chart == -1 picks the last edge.
PeriodEstimate estimate_period(const Graph& g, unsigned long long samples, uint64_t seed,
                               int chart = -1, int threads = 1);

} // namespace graphyps

#endif
