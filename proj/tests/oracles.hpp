// Independent reference implementations used only by tests: deliberately
// naive, sharing no code path with the library routines they check.

#ifndef GRAPHYPS_TESTS_ORACLES_HPP
#define GRAPHYPS_TESTS_ORACLES_HPP

#include <cstdint>
#include <cmath>
#include <algorithm>
#include <numeric>
#include <vector>

#include "graphyps/graph.hpp"
#include "graphyps/mpoly.hpp"
#include "graphyps/polyalg.hpp"

namespace oracles {

// Rank of an integer matrix by fraction-free Gaussian elimination.
inline int integer_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows; ++c) {
        std::size_t piv = rr;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rr], m[piv]);
        for (std::size_t r = rr + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            long long a = m[rr][c], b = m[r][c];
            long long g = std::gcd(a, b);
            long long fa = b / g, fb = a / g;
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * fb - m[rr][k] * fa;
        }
        ++rr;
        ++rank;
    }
    return rank;
}

// Determinant by cofactor expansion (first row), exact in long long.
inline long long det_cofactor(const std::vector<std::vector<long long>>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<long long>> sub(n - 1, std::vector<long long>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        long long term = m[0][j] * det_cofactor(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Spanning tree count by the matrix-tree theorem (for connected graphs).
inline long long matrix_tree_count(const graphyps::Graph& g) {
    int n = g.vertex_count;
    if (n <= 1) return 1;
    std::vector<std::vector<long long>> lap(n, std::vector<long long>(n, 0));
    for (auto [t, h] : g.edges) {
        lap[t][t]++;
        lap[h][h]++;
        lap[t][h]--;
        lap[h][t]--;
    }
    std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) minor[i][j] = lap[i][j];
    return det_cofactor(minor);
}

// Connected edge subsets by brute force over bitmasks with a fresh DFS.
inline std::vector<uint32_t> connected_subsets_bitmask(const graphyps::Graph& g) {
    int m = g.edge_count();
    std::vector<uint32_t> out;
    for (uint32_t s = 1; s < (1u << m); ++s) {
        std::vector<int> verts;
        for (int e = 0; e < m; ++e) {
            if (!(s >> e & 1)) continue;
            verts.push_back(g.edges[e].first);
            verts.push_back(g.edges[e].second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.empty()) continue;
        // DFS from the first touched vertex over selected edges
        std::vector<int> stack = {verts[0]};
        std::vector<char> seen(g.vertex_count, 0);
        seen[verts[0]] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < m; ++e) {
                if (!(s >> e & 1)) continue;
                auto [a, b] = g.edges[e];
                int w = -1;
                if (a == v) w = b;
                else if (b == v) w = a;
                if (w >= 0 && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        bool all = true;
        for (int v : verts)
            if (!seen[v]) all = false;
        if (all) out.push_back(s);
    }
    return out;
}

// Affine zero count by evaluating psi at every point of F_q^N, odometer
// style, with no linear-solve shortcut.
inline unsigned long long naive_affine_zeros(const graphyps::MPoly& psi, uint32_t q) {
    unsigned n = psi.nvars();
    std::vector<uint32_t> point(n, 0);
    unsigned long long zeros = 0;
    for (;;) {
        if (psi.evaluate_mod(point, q) == 0) ++zeros;
        unsigned i = 0;
        while (i < n && ++point[i] == q) point[i++] = 0;
        if (i == n) break;
    }
    return zeros;
}

// Deterministic low-discrepancy point set (Halton, first `dim` primes).
struct Halton {
    std::vector<uint32_t> bases;
    explicit Halton(unsigned dim) {
        uint32_t c = 2;
        while (bases.size() < dim) {
            bool prime = true;
            for (uint32_t d = 2; d * d <= c; ++d)
                if (c % d == 0) prime = false;
            if (prime) bases.push_back(c);
            ++c;
        }
    }
    void point(unsigned long long index, std::vector<double>& out) const {
        for (std::size_t d = 0; d < bases.size(); ++d) {
            double f = 1.0, r = 0.0;
            unsigned long long i = index + 1;
            while (i > 0) {
                f /= bases[d];
                r += f * double(i % bases[d]);
                i /= bases[d];
            }
            out[d] = r;
        }
    }
};

// Quasi-random estimate of the period integral in the chart where the last
// edge variable is 1 (same integrand as the estimator, independent points).
inline double halton_period(const graphyps::MPoly& psi, unsigned long long points) {
    unsigned n = psi.nvars();
    Halton seq(n - 1);
    std::vector<double> u(n - 1), a(n);
    a[n - 1] = 1.0;
    double acc = 0.0;
    for (unsigned long long i = 0; i < points; ++i) {
        seq.point(i, u);
        double jac = 1.0;
        for (unsigned v = 0; v + 1 < n; ++v) {
            double om = 1.0 - u[v];
            a[v] = u[v] / om;
            jac *= om * om;
        }
        double psival = 0.0;
        {
            // direct sparse evaluation
            for (std::size_t t = 0; t < psi.nterms(); ++t) {
                double m = 1.0;
                for (unsigned v = 0; v < n; ++v)
                    for (unsigned k = 0; k < psi.exps(t)[v]; ++k) m *= a[v];
                psival += m;
            }
        }
        double w = 1.0 / (psival * psival * jac);
        if (std::isfinite(w)) acc += w;
    }
    return acc / double(points);
}

} // namespace oracles

#endif
