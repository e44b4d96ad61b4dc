#include "graphyps/pointcount.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "graphyps/polyalg.hpp"

namespace graphyps {

bool is_prime_u32(uint32_t q) {
    if (q < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

namespace {

// Dense multilinear representation: coefficient per subset mask, bit k of the
// level-i mask standing for variable i+k. Substituting the lowest variable
// halves the array.
std::vector<uint32_t> dense_coefficients(const MPoly& psi, uint32_t q) {
    unsigned n = psi.nvars();
    std::vector<uint32_t> dense(std::size_t(1) << n, 0);
    for (std::size_t t = 0; t < psi.nterms(); ++t) {
        uint32_t mask = 0;
        for (unsigned v = 0; v < n; ++v)
            if (psi.exps(t)[v]) mask |= 1u << v;
        i64 c = psi.coef(t) % i64(q);
        if (c < 0) c += q;
        dense[mask] = uint32_t((dense[mask] + uint64_t(c)) % q);
    }
    return dense;
}

struct SweepContext {
    unsigned n;
    uint32_t q;
    std::vector<std::vector<uint32_t>> scratch; // scratch[i]: level-i array

    explicit SweepContext(unsigned nvars, uint32_t qq) : n(nvars), q(qq) {
        scratch.resize(n + 1);
        for (unsigned i = 0; i <= n; ++i) scratch[i].assign(std::size_t(1) << (n - i), 0);
    }

    static void substitute(const std::vector<uint32_t>& src, std::vector<uint32_t>& dst,
                           uint32_t c, uint32_t q) {
        std::size_t half = dst.size();
        for (std::size_t m = 0; m < half; ++m)
            dst[m] = uint32_t((src[2 * m] + uint64_t(c) * src[2 * m + 1]) % q);
    }

    // Counts solutions over levels `level`..n-1 given scratch[level] is loaded.
    unsigned long long sweep(unsigned level) {
        if (level == n - 1) {
            uint32_t alpha = scratch[level][1];
            uint32_t beta = scratch[level][0];
            return alpha != 0 ? 1ULL : (beta == 0 ? q : 0ULL);
        }
        unsigned long long acc = 0;
        for (uint32_t c = 0; c < q; ++c) {
            substitute(scratch[level], scratch[level + 1], c, q);
            acc += sweep(level + 1);
        }
        return acc;
    }
};

} // namespace

unsigned long long affine_zero_count(const MPoly& psi, uint32_t q, int threads,
                                     unsigned long long step_budget) {
    if (!is_prime_u32(q)) fail(Error::Kind::Usage, "field size must be prime");
    unsigned n = psi.nvars();
    if (n == 0) fail(Error::Kind::Usage, "polynomial must have at least one variable");
    if (n > 12) fail(Error::Kind::Bound, "point counting limited to 12 variables");
    if (!psi.is_multilinear()) fail(Error::Kind::Usage, "point counting expects a multilinear polynomial");

    unsigned __int128 steps = 1;
    for (unsigned i = 0; i + 1 < n; ++i) steps *= q;
    if (steps > (unsigned __int128)step_budget)
        fail(Error::Kind::Bound, "point count exceeds the step budget (use force to override)");

    std::vector<uint32_t> dense = dense_coefficients(psi, q);

    if (n == 1) {
        uint32_t alpha = dense[1], beta = dense[0];
        return alpha != 0 ? 1ULL : (beta == 0 ? q : 0ULL);
    }

    if (threads < 1) threads = 1;
    // chunk over assignments of the first k variables
    unsigned k = 0;
    unsigned long long nchunks = 1;
    while (k + 2 < n && nchunks < 4ULL * unsigned(threads)) {
        nchunks *= q;
        ++k;
    }

    std::vector<unsigned long long> counts(nchunks, 0);
    std::atomic<unsigned long long> next{0};
    auto worker = [&] {
        SweepContext ctx(n, q);
        for (;;) {
            unsigned long long chunk = next.fetch_add(1);
            if (chunk >= nchunks) return;
            ctx.scratch[0] = dense;
            unsigned long long rem = chunk;
            for (unsigned i = 0; i < k; ++i) {
                uint32_t c = uint32_t(rem % q);
                rem /= q;
                SweepContext::substitute(ctx.scratch[i], ctx.scratch[i + 1], c, q);
            }
            counts[chunk] = ctx.sweep(k);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return std::accumulate(counts.begin(), counts.end(), 0ULL);
}

PointCountRecord count_projective(const Graph& g, uint32_t q, int threads,
                                  unsigned long long step_budget) {
    auto t0 = std::chrono::steady_clock::now();
    MPoly psi = psi_trees(g);
    unsigned long long affine = affine_zero_count(psi, q, threads, step_budget);
    PointCountRecord r;
    r.graph_fingerprint = graph_fingerprint(g);
    r.q = q;
    r.affine_zero_count = affine;
    if ((affine - 1) % (q - 1) != 0)
        fail(Error::Kind::Domain, "affine zero count of a homogeneous polynomial must be 1 mod q-1");
    r.projective_count = (affine - 1) / (q - 1);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Rat128 {
    __int128 num = 0;
    __int128 den = 1;
    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        __int128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    Rat128 operator+(const Rat128& o) const {
        Rat128 r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Rat128 operator*(const Rat128& o) const {
        Rat128 r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
};

i64 narrow(__int128 x) {
    if (x > __int128(INT64_MAX) || x < __int128(INT64_MIN))
        fail(Error::Kind::Overflow, "interpolation coefficient out of range");
    return i64(x);
}

} // namespace

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

CountFit fit_count_polynomial(const std::vector<PointCountRecord>& records, int degree) {
    if (degree < 0) fail(Error::Kind::Usage, "fit degree must be nonnegative");
    std::vector<PointCountRecord> pts(records);
    std::sort(pts.begin(), pts.end(),
              [](const PointCountRecord& a, const PointCountRecord& b) { return a.q < b.q; });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const PointCountRecord& a, const PointCountRecord& b) {
                              return a.q == b.q;
                          }),
              pts.end());
    if (int(pts.size()) < degree + 1)
        fail(Error::Kind::Usage, "fit needs at least degree+1 records at distinct primes");
    pts.resize(degree + 1);

    int n = degree + 1;
    // coefficients of the Lagrange basis polynomials, accumulated exactly
    std::vector<Rat128> acc(n, Rat128{0, 1});
    for (int i = 0; i < n; ++i) {
        // numerator polynomial prod_{j != i} (x - q_j), integer coefficients
        std::vector<__int128> numpoly = {1};
        __int128 denom = 1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= __int128(i64(pts[i].q) - i64(pts[j].q));
            std::vector<__int128> nxt(numpoly.size() + 1, 0);
            for (std::size_t k = 0; k < numpoly.size(); ++k) {
                nxt[k + 1] += numpoly[k];
                nxt[k] -= numpoly[k] * __int128(pts[j].q);
            }
            numpoly = std::move(nxt);
        }
        for (int k = 0; k < n; ++k) {
            Rat128 term{numpoly.size() > std::size_t(k) ? numpoly[k] : 0, 1};
            term = term * Rat128{__int128(pts[i].projective_count), denom};
            acc[k] = acc[k] + term;
        }
    }

    CountFit fit;
    fit.degree = degree;
    for (auto& r : acc) {
        fit.coefficients.push_back(Rational{narrow(r.num), narrow(r.den)});
        if (r.den != 1) fit.integral = false;
    }
    return fit;
}

bool CountFit::predicts(uint32_t q, unsigned long long count) const {
    __int128 num = 0, den = 1;
    for (int k = degree; k >= 0; --k) {
        // value = value * q + c_k  with value = num/den
        num *= q;
        __int128 cn = coefficients[k].num, cd = coefficients[k].den;
        num = num * cd + cn * den;
        den = den * cd;
        __int128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    if (den < 0) { num = -num; den = -den; }
    return den == 1 && num == __int128(count);
}

} // namespace graphyps
