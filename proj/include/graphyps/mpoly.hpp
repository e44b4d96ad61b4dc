#ifndef GRAPHYPS_MPOLY_HPP
#define GRAPHYPS_MPOLY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graphyps/error.hpp"

namespace graphyps {

using i64 = long long;

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// Sparse multivariate polynomial with exact integer coefficients.
//
// Terms are kept sorted by exponent vector (lexicographic, ascending) with no
// zero coefficients, so equal polynomials compare equal term-by-term and JSON
// output is canonical. Exponents are uint8 per variable; storage is one flat
// array (nterms * nvars) to avoid per-term allocations in the determinant
// expansion, where polynomials reach ~1e6 terms.
class MPoly {
public:
    explicit MPoly(unsigned nvars = 0) : nvars_(nvars) {}

    static MPoly constant(unsigned nvars, i64 c);
    static MPoly variable(unsigned nvars, unsigned v);
    // Sorts, merges duplicates, drops zeros.
    static MPoly from_terms(unsigned nvars,
                            std::vector<std::pair<std::vector<uint8_t>, i64>> terms);

    unsigned nvars() const { return nvars_; }
    std::size_t nterms() const { return coefs_.size(); }
    bool is_zero() const { return coefs_.empty(); }

    const uint8_t* exps(std::size_t i) const { return exps_.data() + i * nvars_; }
    i64 coef(std::size_t i) const { return coefs_[i]; }

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }

    MPoly scaled(i64 c) const;
    // Multiply by the monomial var^by (order-preserving exponent shift).
    MPoly shifted(unsigned var, unsigned by = 1) const;

    int total_degree() const;          // -1 for the zero polynomial
    int degree_in(unsigned var) const; // 0 if var absent, -1 nowhere (zero poly)
    bool is_multilinear() const;
    bool is_homogeneous() const;       // zero counts as homogeneous
    // True when every coefficient is +1.
    bool coefficients_all_one() const;

    i64 evaluate(std::span<const i64> point) const;
    uint32_t evaluate_mod(std::span<const uint32_t> point, uint32_t q) const;

    MPoly substitute(unsigned var, i64 value) const;
    MPoly substitute(unsigned var, const MPoly& value) const;
    // Renumber variables: new_ids[v] is the id of old variable v in the new
    // universe (must be injective over variables actually present).
    MPoly map_vars(std::span<const int> new_ids, unsigned new_nvars) const;

    // Sum of inputs[k].poly, each multiplied by scale * X^mono (mono may be
    // null for no shift). Inputs must share nvars. This is the
    // determinant-expansion workhorse: a k-way merge over already-sorted
    // operands, since a monomial shift preserves term order.
    struct ScaledShift {
        const MPoly* poly;
        const uint8_t* mono; // nullptr or exponent vector of length nvars
        i64 scale;
    };
    static MPoly merge_scaled_shifted(unsigned nvars, std::span<const ScaledShift> inputs);

private:
    unsigned nvars_;
    std::vector<uint8_t> exps_;
    std::vector<i64> coefs_;

    void push_term(const uint8_t* e, i64 c);
    friend class PolyBuilder;
};

// Exact divisibility test: true iff p == d * r for some polynomial r.
// Requires d nonzero and linear in at least one of its variables (always the
// case for the minors handled here); decided by leading-term long division.
bool divides(const MPoly& d, const MPoly& p);

// Accumulates unsorted terms, then finalizes into canonical form.
class PolyBuilder {
public:
    explicit PolyBuilder(unsigned nvars) : nvars_(nvars) {}
    void add(const uint8_t* exps, i64 c);
    void add(const std::vector<uint8_t>& exps, i64 c) { add(exps.data(), c); }
    MPoly build();

private:
    unsigned nvars_;
    std::vector<uint8_t> exps_;
    std::vector<i64> coefs_;
};

} // namespace graphyps

#endif
