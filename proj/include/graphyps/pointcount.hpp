#ifndef GRAPHYPS_POINTCOUNT_HPP
#define GRAPHYPS_POINTCOUNT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "graphyps/graph.hpp"
#include "graphyps/mpoly.hpp"

namespace graphyps {

bool is_prime_u32(uint32_t q);

// Exact number of points of psi == 0 in F_q^N for a multilinear psi with
// N <= 12 variables. Writes psi = alpha * x + beta in the last variable and
// sweeps the q^(N-1) assignments of the others (that power is the step count
// charged against `step_budget`). Deterministic for any thread count.
unsigned long long affine_zero_count(const MPoly& psi, uint32_t q, int threads = 1,
                                     unsigned long long step_budget = 10'000'000'000ULL);

struct PointCountRecord {
    uint64_t graph_fingerprint = 0;
    uint32_t q = 0;
    unsigned long long projective_count = 0;
    unsigned long long affine_zero_count = 0;
    double wall_seconds = 0.0;
};

// Counts projective points of the graph hypersurface of g over F_q. The
// affine zero set of the homogeneous psi is a cone, so q-1 divides
// affine - 1 exactly; that divisibility is enforced.
PointCountRecord count_projective(const Graph& g, uint32_t q, int threads = 1,
                                  unsigned long long step_budget = 10'000'000'000ULL);

// Exact rational with narrow-width reduction; wide enough for the
// interpolation scale used here.
struct Rational {
    i64 num = 0;
    i64 den = 1;
    std::string str() const;
};

struct CountFit {
    int degree = 0;
    std::vector<Rational> coefficients; // ascending powers of q
    bool integral = true;
    // exact evaluation at integer q; requires integral coefficients... also
    // defined for rational fits (value may be non-integer -> returns false)
    bool predicts(uint32_t q, unsigned long long count) const;
};

// Lagrange interpolation through (q_i, projective_count_i) for the first
// degree+1 records (sorted by q); needs degree+1 distinct primes.
CountFit fit_count_polynomial(const std::vector<PointCountRecord>& records, int degree);

} // namespace graphyps

#endif
