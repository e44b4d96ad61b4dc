#include "graphyps/identities.hpp"

#include <algorithm>
#include <array>

#include "graphyps/families.hpp"

namespace graphyps {

namespace {

std::vector<int> removed_outside(unsigned i, unsigned k, unsigned top) {
    // rows to delete so that i..i+k-1 survive, in a matrix indexed 0..top
    std::vector<int> r;
    for (unsigned x = 0; x <= top; ++x)
        if (x < i || x >= i + k) r.push_back(int(x));
    return r;
}

constexpr uint32_t kSpotPrime = 2147483647u; // 2^31 - 1

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint32_t det_mod(std::vector<uint64_t> a, unsigned n, uint32_t p) {
    auto powmod = [p](uint64_t b, uint64_t e) {
        uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    uint64_t detv = 1;
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (unsigned j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            detv = p - detv;
            if (detv == uint64_t(p)) detv = 0;
        }
        uint64_t pivval = a[c * n + c];
        detv = detv * pivval % p;
        uint64_t inv = powmod(pivval, p - 2);
        for (unsigned r = c + 1; r < n; ++r) {
            uint64_t f = a[r * n + c] * inv % p;
            if (f == 0) continue;
            for (unsigned j = c; j < n; ++j)
                a[r * n + j] = (a[r * n + j] + (p - f) * a[c * n + j]) % p;
        }
    }
    return uint32_t(detv % p);
}

uint32_t minor_det_mod(const std::vector<uint64_t>& full, unsigned n, uint32_t p,
                       int ri, int rk, int cj, int ct) {
    std::vector<uint64_t> sub;
    sub.reserve(std::size_t(n) * n);
    unsigned rows = 0;
    for (unsigned r = 0; r < n; ++r) {
        if (int(r) == ri || int(r) == rk) continue;
        for (unsigned c = 0; c < n; ++c) {
            if (int(c) == cj || int(c) == ct) continue;
            sub.push_back(full[r * n + c]);
        }
        ++rows;
    }
    return det_mod(std::move(sub), rows, p);
}

} // namespace

BorderedSymMatrix::BorderedSymMatrix(SymLinMatrix m) : m_(std::move(m)), pm_(to_poly_matrix(m_)) {
    unsigned n1 = m_.size();
    if (n1 < 2) fail(Error::Kind::Usage, "bordered matrix needs size at least 2");
    if (!pm_.is_symmetric()) fail(Error::Kind::Usage, "bordered matrix must be symmetric");
    std::vector<unsigned> seen;
    for (unsigned i = 0; i < n1; ++i) {
        const LinearForm& f = m_(i, n1 - 1);
        if (f.is_zero()) continue;
        if (f.constant() != 0 || f.terms().size() != 1 || f.terms()[0].second != 1)
            fail(Error::Kind::Usage, "border entries must be plain variables or zero");
        seen.push_back(f.terms()[0].first);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        fail(Error::Kind::Usage, "nonzero border variables must be mutually distinct");
}

MPoly BorderedSymMatrix::border_entry(unsigned i) const {
    if (i >= size()) fail(Error::Kind::Usage, "border index out of range");
    return m_(i, size() - 1).to_mpoly(nvars());
}

MPoly BorderedSymMatrix::principal_minor_from(unsigned i, unsigned k) const {
    unsigned n = border_index();
    if (i + k > size()) fail(Error::Kind::Usage, "principal minor out of range");
    auto gone = removed_outside(i, k, n);
    return minor_det(pm_, gone, gone);
}

MPoly BorderedSymMatrix::principal_minor(unsigned k) const { return principal_minor_from(0, k); }

MPoly BorderedSymMatrix::step_minor(unsigned t) const {
    unsigned n = border_index();
    if (t < 1 || t > n) fail(Error::Kind::Usage, "step minor index out of range");
    std::vector<int> rows, cols;
    for (unsigned x = t; x <= n; ++x) rows.push_back(int(x));
    cols.push_back(0);
    for (unsigned x = t + 1; x <= n; ++x) cols.push_back(int(x));
    return minor_det(pm_, rows, cols);
}

MPoly BorderedSymMatrix::interior_minor(unsigned i, unsigned j) const {
    unsigned n = border_index();
    if (i >= n || j >= n) fail(Error::Kind::Usage, "interior minor index out of range");
    std::vector<int> rows = {int(i), int(n)};
    std::vector<int> cols = {int(j), int(n)};
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    return minor_det(pm_, rows, cols);
}

MPoly BorderedSymMatrix::det() const { return graphyps::det(pm_); }

MPoly BorderedSymMatrix::border_quadratic() const {
    unsigned n = border_index();
    MPoly acc(nvars());
    for (unsigned i = 0; i < n; ++i) {
        MPoly ai = border_entry(i);
        if (ai.is_zero()) continue;
        for (unsigned j = 0; j < n; ++j) {
            MPoly aj = border_entry(j);
            if (aj.is_zero()) continue;
            MPoly term = ai * aj * interior_minor(i, j);
            if ((i + j) % 2 == 1) term = -term;
            acc += term;
        }
    }
    return acc;
}

MPoly BorderedSymMatrix::border_linear() const {
    unsigned n = border_index();
    if (n < 1) fail(Error::Kind::Usage, "border linear form needs size >= 2");
    MPoly acc = border_entry(n - 1) * principal_minor(n - 1);
    for (unsigned i = 0; i + 1 < n; ++i) {
        MPoly term = border_entry(i) * interior_minor(i, n - 1);
        if ((i + n - 1) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

bool dodgson_identity_holds(const PolyMatrix& m, int i, int j, int k, int t) {
    int n1 = int(m.size);
    if (n1 < 2) fail(Error::Kind::Usage, "identity needs a matrix of size >= 2");
    auto in_range = [n1](int x) { return x >= 0 && x < n1; };
    if (!in_range(i) || !in_range(j) || !in_range(k) || !in_range(t))
        fail(Error::Kind::Usage, "minor index out of range");
    if (i == k || j == t) fail(Error::Kind::Usage, "row indices and column indices must differ");

    // The two-row/two-column minor on the right is orientation-blind while the
    // left side is antisymmetric in (i,k) and in (j,t), so a crossed ordering
    // flips the sign of the right-hand side.
    i64 sign = ((i < k) == (j < t)) ? 1 : -1;

    // spot check at a fixed pseudo-random point modulo a large prime
    {
        uint64_t st = 0x5eedd00d5eedd00dULL + uint64_t(m.size) * 1315423911ULL;
        std::vector<uint32_t> point(m.nvars);
        for (auto& x : point) x = uint32_t(splitmix64(st) % kSpotPrime);
        std::vector<uint64_t> vals(std::size_t(n1) * n1);
        for (int r = 0; r < n1; ++r)
            for (int c = 0; c < n1; ++c)
                vals[std::size_t(r) * n1 + c] = m.at(r, c).evaluate_mod(point, kSpotPrime);
        uint64_t p = kSpotPrime;
        uint64_t lhs = (minor_det_mod(vals, n1, kSpotPrime, i, -1, j, -1) *
                        uint64_t(minor_det_mod(vals, n1, kSpotPrime, k, -1, t, -1))) % p;
        uint64_t lhs2 = (minor_det_mod(vals, n1, kSpotPrime, k, -1, j, -1) *
                         uint64_t(minor_det_mod(vals, n1, kSpotPrime, i, -1, t, -1))) % p;
        uint64_t rhs = (det_mod(vals, n1, kSpotPrime) *
                        uint64_t(minor_det_mod(vals, n1, kSpotPrime, i, k, j, t))) % p;
        if (sign < 0) rhs = (p - rhs) % p;
        if ((lhs + p - lhs2) % p != rhs) return false;
    }

    auto sorted2 = [](int a, int b) {
        std::vector<int> v{a, b};
        std::sort(v.begin(), v.end());
        return v;
    };
    MPoly lhs = minor_det(m, {i}, {j}) * minor_det(m, {k}, {t}) -
                minor_det(m, {k}, {j}) * minor_det(m, {i}, {t});
    MPoly rhs = (det(m) * minor_det(m, sorted2(i, k), sorted2(j, t))).scaled(sign);
    return lhs == rhs;
}

bool corner_minor_square_identity_holds(const PolyMatrix& m) {
    if (m.size < 2) fail(Error::Kind::Usage, "identity needs a matrix of size >= 2");
    if (!m.is_symmetric()) fail(Error::Kind::Usage, "identity requires a symmetric matrix");
    int n = int(m.size) - 1;
    MPoly i_n = minor_det(m, {n}, {n});
    MPoly i1_n = minor_det(m, {0}, {0});
    MPoly i1_nm1 = minor_det(m, {0, n}, {0, n});
    MPoly i_np1 = det(m);
    MPoly s_n = minor_det(m, {n}, {0});
    return i_n * i1_n - i1_nm1 * i_np1 == s_n * s_n;
}

bool border_decomposition_holds(const BorderedSymMatrix& m) {
    unsigned n = m.border_index();
    MPoly lhs = m.det();
    MPoly rhs = m.border_entry(n) * m.principal_minor(n) - m.border_quadratic();
    return lhs == rhs;
}

CongruenceCheck border_square_congruence(const BorderedSymMatrix& m) {
    unsigned n = m.border_index();
    MPoly i_n = m.principal_minor(n);
    MPoly i_nm1 = m.principal_minor(n - 1);
    CongruenceCheck r{};
    r.hypothesis_ok = !i_n.is_zero() && !divides(i_n, i_nm1);
    MPoly li = m.border_linear();
    MPoly diff = i_nm1 * m.border_quadratic() - li * li;
    r.holds = i_n.is_zero() ? diff.is_zero() : divides(i_n, diff);
    return r;
}

CongruenceCheck degenerate_border_congruence(const BorderedSymMatrix& m) {
    unsigned n = m.border_index();
    if (n < 2) fail(Error::Kind::Usage, "degenerate congruence needs size >= 3");
    MPoly i_n = m.principal_minor(n);
    MPoly i_nm1 = m.principal_minor(n - 1);
    CongruenceCheck r{};
    r.hypothesis_ok = !i_n.is_zero() && divides(i_n, i_nm1);
    // truncation of G_n without the a_{n-1} terms
    MPoly trunc(m.nvars());
    for (unsigned i = 0; i + 1 < n; ++i) {
        MPoly ai = m.border_entry(i);
        if (ai.is_zero()) continue;
        trunc += ai * ai * m.interior_minor(i, i);
        for (unsigned j = i + 1; j + 1 < n; ++j) {
            MPoly aj = m.border_entry(j);
            if (aj.is_zero()) continue;
            MPoly term = (ai * aj * m.interior_minor(i, j)).scaled(2);
            if ((i + j) % 2 == 1) term = -term;
            trunc += term;
        }
    }
    MPoly diff = m.border_quadratic() - trunc;
    r.holds = i_n.is_zero() ? diff.is_zero() : divides(i_n, diff);
    return r;
}

namespace {

PolyMatrix random_int_matrix(unsigned s, unsigned nvars, uint64_t& rng) {
    PolyMatrix m(s, nvars);
    for (unsigned i = 0; i < s; ++i)
        for (unsigned j = 0; j < s; ++j)
            m.at(i, j) = MPoly::constant(nvars, i64(splitmix64(rng) % 19) - 9);
    return m;
}

PolyMatrix symmetrized(PolyMatrix m) {
    for (unsigned i = 0; i < m.size; ++i)
        for (unsigned j = i + 1; j < m.size; ++j)
            m.at(j, i) = m.at(i, j);
    return m;
}

// Random symmetric integer interior with a fresh-variable border.
BorderedSymMatrix random_bordered(unsigned s, uint64_t& rng) {
    unsigned n = s - 1;
    SymLinMatrix m(s, s); // border variables a_0..a_n get ids 0..n
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j)
            m.set(i, j, LinearForm(i64(splitmix64(rng) % 19) - 9));
    for (unsigned i = 0; i < n; ++i) {
        bool zero = (splitmix64(rng) % 4) == 0 && i + 1 < n;
        m.set(i, n, zero ? LinearForm() : LinearForm::var(i));
    }
    m.set(n, n, LinearForm::var(n));
    return BorderedSymMatrix(std::move(m));
}

// Instance with the leading (n-1)-block singular through a duplicated row
// pair but nonzero I_n: rows 0 and 1 agree on columns 0..n-2 and differ in
// column n-1; the border vanishes at the duplicated rows.
BorderedSymMatrix degenerate_instance(unsigned s, uint64_t& rng) {
    unsigned n = s - 1;
    unsigned nvars = n - 1; // a_2..a_n
    SymLinMatrix m(s, nvars);
    std::vector<i64> shared(n, 0);
    for (unsigned k = 0; k + 1 < n; ++k) shared[k] = i64(splitmix64(rng) % 19) - 9;
    shared[1] = shared[0];
    for (unsigned k = 0; k + 1 < n; ++k) {
        m.set(0, k, LinearForm(shared[k]));
        m.set(1, k, LinearForm(shared[k]));
    }
    m.set(0, n - 1, LinearForm(i64(splitmix64(rng) % 19) - 9));
    m.set(1, n - 1, LinearForm(m(0, n - 1).constant() + 1 + i64(splitmix64(rng) % 7)));
    for (unsigned i = 2; i < n; ++i)
        for (unsigned j = i; j < n; ++j)
            m.set(i, j, LinearForm(i64(splitmix64(rng) % 19) - 9));
    m.set(0, n, LinearForm());
    m.set(1, n, LinearForm());
    for (unsigned i = 2; i <= n; ++i) m.set(i, n, LinearForm::var(i - 2));
    return BorderedSymMatrix(std::move(m));
}

} // namespace

std::vector<SelfTestLine> identities_selftest(int min_size, int max_size, int trials,
                                              uint64_t seed) {
    if (min_size < 2 || max_size > 8 || min_size > max_size || trials < 1)
        fail(Error::Kind::Usage, "selftest sizes must lie in 2..8 with at least one trial");
    uint64_t rng = seed ^ 0xa02bdbf7bb3c0a7ULL;

    SelfTestLine dodgson{"dodgson_minor_identity", 0, true};
    SelfTestLine corner{"corner_minor_square_identity", 0, true};
    SelfTestLine decomp{"border_decomposition", 0, true};
    SelfTestLine square{"border_square_congruence", 0, true};
    SelfTestLine degen{"degenerate_border_congruence", 0, true};
    SelfTestLine symbolic{"dodgson_symbolic_graph_matrices", 0, true};

    for (int s = min_size; s <= max_size; ++s) {
        for (int trial = 0; trial < trials; ++trial) {
            PolyMatrix m = random_int_matrix(unsigned(s), 0, rng);
            std::vector<std::array<int, 4>> tuples;
            if (s <= 4) {
                for (int i = 0; i < s; ++i)
                    for (int k = 0; k < s; ++k)
                        for (int j = 0; j < s; ++j)
                            for (int t = 0; t < s; ++t)
                                if (i != k && j != t) tuples.push_back({i, j, k, t});
            } else {
                for (int c = 0; c < 40; ++c) {
                    int i = int(splitmix64(rng) % s), k = int(splitmix64(rng) % s);
                    int j = int(splitmix64(rng) % s), t = int(splitmix64(rng) % s);
                    if (i == k || j == t) { --c; continue; }
                    tuples.push_back({i, j, k, t});
                }
            }
            for (auto [i, j, k, t] : tuples) {
                dodgson.cases++;
                if (!dodgson_identity_holds(m, i, j, k, t)) dodgson.pass = false;
            }

            PolyMatrix sym = symmetrized(std::move(m));
            corner.cases++;
            if (!corner_minor_square_identity_holds(sym)) corner.pass = false;

            BorderedSymMatrix b = random_bordered(unsigned(s), rng);
            decomp.cases++;
            if (!border_decomposition_holds(b)) decomp.pass = false;
            if (s >= 3) {
                auto check = border_square_congruence(b);
                square.cases++;
                if (!check.holds) square.pass = false;
            }
        }
        if (s >= 4) {
            for (int trial = 0; trial < std::min(trials, 10); ++trial) {
                BorderedSymMatrix d = degenerate_instance(unsigned(s), rng);
                if (d.principal_minor(d.border_index()).is_zero()) continue;
                auto check = degenerate_border_congruence(d);
                degen.cases++;
                if (!(check.hypothesis_ok && check.holds)) degen.pass = false;
            }
        }
    }

    // symbolic graph matrices of the small named graphs
    std::vector<Graph> catalog = {wheel(3), wheel(4), wheel(5), wheel(6),
                                  zigzag(5), zigzag(6), xx5(), st5()};
    for (const Graph& g : catalog) {
        PolyMatrix m = to_poly_matrix(graph_matrix(g, cycle_basis(g)));
        int s = int(m.size);
        std::vector<std::array<int, 4>> tuples = {{0, 0, 1, 1}, {0, 1, 1, 0}};
        if (s >= 4) tuples.push_back({0, 1, 2, 3});
        if (s >= 5) tuples.push_back({1, 2, 4, 0});
        for (auto [i, j, k, t] : tuples) {
            symbolic.cases++;
            if (!dodgson_identity_holds(m, i, j, k, t)) symbolic.pass = false;
        }
        symbolic.cases++;
        if (!corner_minor_square_identity_holds(m)) symbolic.pass = false;
    }

    return {dodgson, corner, decomp, square, degen, symbolic};
}

bool interior_independent_of_second_border(const BorderedSymMatrix& m) {
    unsigned n = m.border_index();
    if (n < 1) return true;
    MPoly a = m.border_entry(n - 1);
    if (a.is_zero()) return true;
    unsigned var = 0;
    for (unsigned v = 0; v < m.nvars(); ++v)
        if (a.degree_in(v) == 1) { var = v; break; }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (m.matrix()(i, j).coeff(var) != 0) return false;
    return true;
}

} // namespace graphyps
