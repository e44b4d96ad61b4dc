#include "graphyps/period.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "graphyps/divergence.hpp"
#include "graphyps/polyalg.hpp"

namespace graphyps {

namespace {

constexpr unsigned long long kBatchSize = 1u << 14;

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(uint64_t& state) {
    return double(splitmix64(state) >> 11) * 0x1.0p-53;
}

// psi flattened for fast evaluation: per term the list of variable indices
struct FlatPoly {
    std::vector<uint32_t> var_lists;
    std::vector<uint32_t> offsets; // nterms+1
    explicit FlatPoly(const MPoly& p) {
        offsets.push_back(0);
        for (std::size_t t = 0; t < p.nterms(); ++t) {
            for (unsigned v = 0; v < p.nvars(); ++v)
                for (unsigned k = 0; k < p.exps(t)[v]; ++k) var_lists.push_back(v);
            offsets.push_back(uint32_t(var_lists.size()));
        }
    }
    double eval(const std::vector<double>& a) const {
        double acc = 0.0;
        for (std::size_t t = 0; t + 1 < offsets.size(); ++t) {
            double m = 1.0;
            for (uint32_t k = offsets[t]; k < offsets[t + 1]; ++k) m *= a[var_lists[k]];
            acc += m;
        }
        return acc;
    }
};

struct BatchResult {
    double sum = 0.0;
    double sumsq = 0.0;
    unsigned long long rejected = 0;
};

} // namespace

PeriodEstimate estimate_period(const Graph& g, unsigned long long samples, uint64_t seed,
                               int chart, int threads) {
    if (samples == 0) fail(Error::Kind::Usage, "sample count must be positive");
    PldResult pld = is_pld(g);
    if (!pld.pld) {
        std::string why;
        switch (pld.reason) {
            case PldResult::Reason::Disconnected: why = "graph is disconnected"; break;
            case PldResult::Reason::NotLogDivergent: why = "graph is not logarithmically divergent"; break;
            default: why = "graph has a non-convergent proper subgraph"; break;
        }
        throw ConvergenceRefused("period integral diverges: " + why, pld.witness);
    }

    int n = g.edge_count();
    if (chart == -1) chart = n - 1;
    if (chart < 0 || chart >= n) fail(Error::Kind::Usage, "chart edge id out of range");

    MPoly psi = psi_trees(g);
    FlatPoly flat(psi);

    unsigned long long nbatches = (samples + kBatchSize - 1) / kBatchSize;
    std::vector<BatchResult> results(nbatches);
    std::atomic<unsigned long long> next{0};

    auto run_batch = [&](unsigned long long b) {
        unsigned long long lo = b * kBatchSize;
        unsigned long long hi = std::min(samples, lo + kBatchSize);
        uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (b + 1));
        state = splitmix64(state); // decorrelate consecutive batch seeds
        BatchResult res;
        std::vector<double> a(n);
        a[chart] = 1.0;
        for (unsigned long long s = lo; s < hi; ++s) {
            double jac = 1.0;
            for (int v = 0; v < n; ++v) {
                if (v == chart) continue;
                double u = uniform01(state);
                double one_minus = 1.0 - u;
                a[v] = u / one_minus;
                jac *= one_minus * one_minus; // weight carries 1/jac
            }
            double psival = flat.eval(a);
            double w = 1.0 / (psival * psival * jac);
            if (!std::isfinite(w)) {
                res.rejected++;
                continue;
            }
            res.sum += w;
            res.sumsq += w * w;
        }
        results[b] = res;
    };

    if (threads < 1) threads = 1;
    if (threads == 1 || nbatches == 1) {
        for (unsigned long long b = 0; b < nbatches; ++b) run_batch(b);
    } else {
        auto worker = [&] {
            for (;;) {
                unsigned long long b = next.fetch_add(1);
                if (b >= nbatches) return;
                run_batch(b);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // combine in fixed batch order for bit-stable output
    double sum = 0.0, sumsq = 0.0;
    unsigned long long rejected = 0;
    for (auto& r : results) {
        sum += r.sum;
        sumsq += r.sumsq;
        rejected += r.rejected;
    }

    PeriodEstimate est;
    est.samples = samples;
    est.rejected = rejected;
    est.seed = seed;
    est.chart = chart;
    est.graph_fingerprint = graph_fingerprint(g);
    double nn = double(samples);
    est.mean = sum / nn;
    if (samples > 1) {
        double var = (sumsq - nn * est.mean * est.mean) / (nn - 1.0);
        est.standard_error = var > 0 ? std::sqrt(var / nn) : 0.0;
    }
    return est;
}

} // namespace graphyps
