#include "graphyps/mpoly.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <queue>

namespace graphyps {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        fail(Error::Kind::Overflow, "integer overflow in polynomial arithmetic");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(Error::Kind::Overflow, "integer overflow in polynomial arithmetic");
    return r;
}

namespace {

int cmp_exps(const uint8_t* a, const uint8_t* b, unsigned n) {
    return n == 0 ? 0 : std::memcmp(a, b, n);
}

} // namespace

void MPoly::push_term(const uint8_t* e, i64 c) {
    exps_.insert(exps_.end(), e, e + nvars_);
    coefs_.push_back(c);
}

MPoly MPoly::constant(unsigned nvars, i64 c) {
    MPoly p(nvars);
    if (c != 0) {
        std::vector<uint8_t> z(nvars, 0);
        p.push_term(z.data(), c);
    }
    return p;
}

MPoly MPoly::variable(unsigned nvars, unsigned v) {
    if (v >= nvars) fail(Error::Kind::Usage, "variable id out of range");
    MPoly p(nvars);
    std::vector<uint8_t> e(nvars, 0);
    e[v] = 1;
    p.push_term(e.data(), 1);
    return p;
}

MPoly MPoly::from_terms(unsigned nvars,
                        std::vector<std::pair<std::vector<uint8_t>, i64>> terms) {
    PolyBuilder b(nvars);
    for (auto& [e, c] : terms) {
        if (e.size() != nvars) fail(Error::Kind::Usage, "exponent vector length mismatch");
        b.add(e.data(), c);
    }
    return b.build();
}

bool MPoly::operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && coefs_ == o.coefs_ && exps_ == o.exps_;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& c : r.coefs_) c = -c;
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) fail(Error::Kind::Usage, "polynomial variable universes differ");
    unsigned n = a.nvars_;
    MPoly r(n);
    r.exps_.reserve(a.exps_.size() + b.exps_.size());
    r.coefs_.reserve(a.coefs_.size() + b.coefs_.size());
    std::size_t i = 0, j = 0;
    while (i < a.nterms() && j < b.nterms()) {
        int c = cmp_exps(a.exps(i), b.exps(j), n);
        if (c < 0) {
            r.push_term(a.exps(i), a.coef(i)); ++i;
        } else if (c > 0) {
            r.push_term(b.exps(j), b.coef(j)); ++j;
        } else {
            i64 s = checked_add(a.coef(i), b.coef(j));
            if (s != 0) r.push_term(a.exps(i), s);
            ++i; ++j;
        }
    }
    for (; i < a.nterms(); ++i) r.push_term(a.exps(i), a.coef(i));
    for (; j < b.nterms(); ++j) r.push_term(b.exps(j), b.coef(j));
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) fail(Error::Kind::Usage, "polynomial variable universes differ");
    unsigned n = a.nvars_;
    PolyBuilder out(n);
    std::vector<uint8_t> e(n);
    for (std::size_t i = 0; i < a.nterms(); ++i) {
        const uint8_t* ea = a.exps(i);
        for (std::size_t j = 0; j < b.nterms(); ++j) {
            const uint8_t* eb = b.exps(j);
            for (unsigned v = 0; v < n; ++v) {
                unsigned s = unsigned(ea[v]) + unsigned(eb[v]);
                if (s > 255) fail(Error::Kind::Overflow, "exponent overflow");
                e[v] = uint8_t(s);
            }
            out.add(e.data(), checked_mul(a.coef(i), b.coef(j)));
        }
    }
    return out.build();
}

MPoly MPoly::scaled(i64 c) const {
    if (c == 0) return MPoly(nvars_);
    MPoly r(*this);
    for (auto& x : r.coefs_) x = checked_mul(x, c);
    return r;
}

MPoly MPoly::shifted(unsigned var, unsigned by) const {
    if (var >= nvars_) fail(Error::Kind::Usage, "variable id out of range");
    MPoly r(*this);
    for (std::size_t i = 0; i < r.nterms(); ++i) {
        unsigned s = unsigned(r.exps_[i * nvars_ + var]) + by;
        if (s > 255) fail(Error::Kind::Overflow, "exponent overflow");
        r.exps_[i * nvars_ + var] = uint8_t(s);
    }
    return r;
}

int MPoly::total_degree() const {
    int d = -1;
    for (std::size_t i = 0; i < nterms(); ++i) {
        int s = 0;
        for (unsigned v = 0; v < nvars_; ++v) s += exps(i)[v];
        d = std::max(d, s);
    }
    return d;
}

int MPoly::degree_in(unsigned var) const {
    if (is_zero()) return -1;
    int d = 0;
    for (std::size_t i = 0; i < nterms(); ++i) d = std::max(d, int(exps(i)[var]));
    return d;
}

bool MPoly::is_multilinear() const {
    for (std::size_t i = 0; i < nterms(); ++i)
        for (unsigned v = 0; v < nvars_; ++v)
            if (exps(i)[v] > 1) return false;
    return true;
}

bool MPoly::is_homogeneous() const {
    if (is_zero()) return true;
    int d0 = -1;
    for (std::size_t i = 0; i < nterms(); ++i) {
        int s = 0;
        for (unsigned v = 0; v < nvars_; ++v) s += exps(i)[v];
        if (d0 < 0) d0 = s;
        else if (s != d0) return false;
    }
    return true;
}

bool MPoly::coefficients_all_one() const {
    return std::all_of(coefs_.begin(), coefs_.end(), [](i64 c) { return c == 1; });
}

i64 MPoly::evaluate(std::span<const i64> point) const {
    if (point.size() != nvars_) fail(Error::Kind::Usage, "evaluation point length mismatch");
    i64 acc = 0;
    for (std::size_t i = 0; i < nterms(); ++i) {
        i64 t = coef(i);
        for (unsigned v = 0; v < nvars_; ++v)
            for (unsigned k = 0; k < exps(i)[v]; ++k) t = checked_mul(t, point[v]);
        acc = checked_add(acc, t);
    }
    return acc;
}

uint32_t MPoly::evaluate_mod(std::span<const uint32_t> point, uint32_t q) const {
    if (point.size() != nvars_) fail(Error::Kind::Usage, "evaluation point length mismatch");
    uint64_t acc = 0;
    for (std::size_t i = 0; i < nterms(); ++i) {
        uint64_t t = uint64_t(((coef(i) % i64(q)) + i64(q)) % i64(q));
        for (unsigned v = 0; v < nvars_; ++v)
            for (unsigned k = 0; k < exps(i)[v]; ++k) t = (t * point[v]) % q;
        acc = (acc + t) % q;
    }
    return uint32_t(acc);
}

MPoly MPoly::substitute(unsigned var, i64 value) const {
    if (var >= nvars_) fail(Error::Kind::Usage, "variable id out of range");
    PolyBuilder out(nvars_);
    std::vector<uint8_t> e(nvars_);
    for (std::size_t i = 0; i < nterms(); ++i) {
        std::memcpy(e.data(), exps(i), nvars_);
        i64 c = coef(i);
        for (unsigned k = 0; k < e[var]; ++k) c = checked_mul(c, value);
        e[var] = 0;
        if (c != 0) out.add(e.data(), c);
    }
    return out.build();
}

MPoly MPoly::substitute(unsigned var, const MPoly& value) const {
    if (var >= nvars_) fail(Error::Kind::Usage, "variable id out of range");
    if (value.nvars_ != nvars_) fail(Error::Kind::Usage, "polynomial variable universes differ");
    int dmax = degree_in(var);
    std::vector<MPoly> pow;
    pow.push_back(MPoly::constant(nvars_, 1));
    for (int k = 1; k <= dmax; ++k) pow.push_back(pow.back() * value);
    MPoly acc(nvars_);
    std::vector<uint8_t> e(nvars_);
    for (std::size_t i = 0; i < nterms(); ++i) {
        std::memcpy(e.data(), exps(i), nvars_);
        unsigned d = e[var];
        e[var] = 0;
        MPoly m(nvars_);
        m.push_term(e.data(), coef(i));
        acc += m * pow[d];
    }
    return acc;
}

MPoly MPoly::map_vars(std::span<const int> new_ids, unsigned new_nvars) const {
    if (new_ids.size() != nvars_) fail(Error::Kind::Usage, "variable map length mismatch");
    PolyBuilder out(new_nvars);
    std::vector<uint8_t> e(new_nvars);
    for (std::size_t i = 0; i < nterms(); ++i) {
        std::fill(e.begin(), e.end(), 0);
        for (unsigned v = 0; v < nvars_; ++v) {
            uint8_t x = exps(i)[v];
            if (x == 0) continue;
            int nv = new_ids[v];
            if (nv < 0 || unsigned(nv) >= new_nvars)
                fail(Error::Kind::Usage, "variable map target out of range");
            e[nv] = uint8_t(e[nv] + x);
        }
        out.add(e.data(), coef(i));
    }
    return out.build();
}

MPoly MPoly::merge_scaled_shifted(unsigned nvars, std::span<const ScaledShift> inputs) {
    struct Cursor {
        const MPoly* p;
        const uint8_t* mono;
        i64 scale;
        std::size_t idx;
        std::vector<uint8_t> cur;
        void load(unsigned n) {
            cur.assign(p->exps(idx), p->exps(idx) + n);
            if (mono) {
                for (unsigned v = 0; v < n; ++v) {
                    unsigned s = unsigned(cur[v]) + mono[v];
                    if (s > 255) fail(Error::Kind::Overflow, "exponent overflow");
                    cur[v] = uint8_t(s);
                }
            }
        }
    };
    std::vector<Cursor> cs;
    cs.reserve(inputs.size());
    for (auto& in : inputs) {
        if (in.poly->nvars() != nvars)
            fail(Error::Kind::Usage, "polynomial variable universes differ");
        if (in.scale == 0 || in.poly->is_zero()) continue;
        Cursor c{in.poly, in.mono, in.scale, 0, {}};
        c.load(nvars);
        cs.push_back(std::move(c));
    }
    auto ge = [&](std::size_t x, std::size_t y) {
        return cmp_exps(cs[x].cur.data(), cs[y].cur.data(), nvars) > 0;
    };
    std::vector<std::size_t> heap(cs.size());
    std::iota(heap.begin(), heap.end(), 0);
    auto cmp_heap = [&](std::size_t x, std::size_t y) { return ge(x, y); };
    std::make_heap(heap.begin(), heap.end(), cmp_heap);

    MPoly r(nvars);
    std::vector<uint8_t> pend;
    i64 pend_c = 0;
    bool have = false;
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), cmp_heap);
        std::size_t k = heap.back();
        Cursor& c = cs[k];
        i64 tc = checked_mul(c.p->coef(c.idx), c.scale);
        if (have && cmp_exps(pend.data(), c.cur.data(), nvars) == 0) {
            pend_c = checked_add(pend_c, tc);
        } else {
            if (have && pend_c != 0) r.push_term(pend.data(), pend_c);
            pend = c.cur;
            pend_c = tc;
            have = true;
        }
        c.idx++;
        if (c.idx < c.p->nterms()) {
            c.load(nvars);
            std::push_heap(heap.begin(), heap.end(), cmp_heap);
        } else {
            heap.pop_back();
        }
    }
    if (have && pend_c != 0) r.push_term(pend.data(), pend_c);
    return r;
}

void PolyBuilder::add(const uint8_t* exps, i64 c) {
    if (c == 0) return;
    exps_.insert(exps_.end(), exps, exps + nvars_);
    coefs_.push_back(c);
}

MPoly PolyBuilder::build() {
    std::size_t n = coefs_.size();
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    unsigned nv = nvars_;
    const uint8_t* base = exps_.data();
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return cmp_exps(base + std::size_t(a) * nv, base + std::size_t(b) * nv, nv) < 0;
    });
    MPoly r(nv);
    r.exps_.reserve(exps_.size());
    r.coefs_.reserve(n);
    std::size_t i = 0;
    while (i < n) {
        const uint8_t* e = base + std::size_t(order[i]) * nv;
        i64 acc = coefs_[order[i]];
        std::size_t j = i + 1;
        while (j < n && cmp_exps(e, base + std::size_t(order[j]) * nv, nv) == 0) {
            acc = checked_add(acc, coefs_[order[j]]);
            ++j;
        }
        if (acc != 0) r.push_term(e, acc);
        i = j;
    }
    return r;
}

bool divides(const MPoly& d, const MPoly& p) {
    if (d.is_zero()) fail(Error::Kind::Usage, "division by the zero polynomial");
    unsigned n = d.nvars();
    if (p.nvars() != n) fail(Error::Kind::Usage, "polynomial variable universes differ");
    bool has_linear = false;
    for (unsigned v = 0; v < n && !has_linear; ++v) {
        int dv = d.degree_in(v);
        has_linear = (dv == 1);
    }
    if (!has_linear && d.total_degree() > 0)
        fail(Error::Kind::Usage, "divisor is not linear in any variable");

    // Long division by the leading term (last in ascending lex order). When p
    // is a multiple, every reduction step divides exactly; the first monomial
    // or coefficient mismatch certifies non-divisibility.
    const uint8_t* lead = d.exps(d.nterms() - 1);
    i64 lead_c = d.coef(d.nterms() - 1);
    MPoly rem = p;
    std::vector<uint8_t> q(n);
    while (!rem.is_zero()) {
        const uint8_t* top = rem.exps(rem.nterms() - 1);
        i64 top_c = rem.coef(rem.nterms() - 1);
        for (unsigned v = 0; v < n; ++v) {
            if (top[v] < lead[v]) return false;
            q[v] = uint8_t(top[v] - lead[v]);
        }
        if (top_c % lead_c != 0) return false;
        i64 qc = top_c / lead_c;
        // rem -= (qc * X^q) * d
        PolyBuilder sub(n);
        std::vector<uint8_t> e(n);
        for (std::size_t i = 0; i < d.nterms(); ++i) {
            for (unsigned v = 0; v < n; ++v) {
                unsigned s = unsigned(d.exps(i)[v]) + q[v];
                if (s > 255) fail(Error::Kind::Overflow, "exponent overflow");
                e[v] = uint8_t(s);
            }
            sub.add(e.data(), checked_mul(d.coef(i), qc));
        }
        rem = rem - sub.build();
    }
    return true;
}

} // namespace graphyps
