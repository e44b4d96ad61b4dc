#ifndef GRAPHYPS_POLYALG_HPP
#define GRAPHYPS_POLYALG_HPP

#include <string>
#include <vector>

#include "graphyps/graph.hpp"
#include "graphyps/mpoly.hpp"

namespace graphyps {

// Integer affine-linear form c0 + sum c_v * x_v. Graph matrices never use the
// constant part; it exists so integer test matrices fit the same machinery.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(i64 constant) : constant_(constant) {}
    static LinearForm var(unsigned v, i64 coeff = 1);

    i64 constant() const { return constant_; }
    i64 coeff(unsigned v) const;
    const std::vector<std::pair<unsigned, i64>>& terms() const { return terms_; }
    bool is_zero() const { return constant_ == 0 && terms_.empty(); }

    void add_var(unsigned v, i64 coeff);
    void add_constant(i64 c) { constant_ = checked_add(constant_, c); }
    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-() const;
    bool operator==(const LinearForm& o) const = default;

    MPoly to_mpoly(unsigned nvars) const;

private:
    i64 constant_ = 0;
    std::vector<std::pair<unsigned, i64>> terms_; // sorted by var, no zeros
};

// Symmetric matrix of linear forms over a fixed variable universe.
class SymLinMatrix {
public:
    SymLinMatrix(unsigned size, unsigned nvars)
        : size_(size), nvars_(nvars), entries_(std::size_t(size) * size) {}

    unsigned size() const { return size_; }
    unsigned nvars() const { return nvars_; }
    const LinearForm& operator()(unsigned i, unsigned j) const {
        return entries_.at(std::size_t(i) * size_ + j);
    }
    void set(unsigned i, unsigned j, LinearForm f);

private:
    unsigned size_;
    unsigned nvars_;
    std::vector<LinearForm> entries_;
};

// Dense square matrix of polynomials; the common ground for determinant and
// minor computations (integer matrices are constant polynomials).
struct PolyMatrix {
    unsigned size = 0;
    unsigned nvars = 0;
    std::vector<MPoly> entries;

    PolyMatrix() = default;
    PolyMatrix(unsigned n, unsigned nv)
        : size(n), nvars(nv), entries(std::size_t(n) * n, MPoly(nv)) {}

    MPoly& at(unsigned i, unsigned j) { return entries.at(std::size_t(i) * size + j); }
    const MPoly& at(unsigned i, unsigned j) const { return entries.at(std::size_t(i) * size + j); }
    bool is_symmetric() const;
};

PolyMatrix to_poly_matrix(const SymLinMatrix& m);

// Exact determinant by minor-memoized expansion over column subsets (2^n
// minors); zero minors are dropped, so banded matrices stay cheap. n <= 14.
MPoly det(const PolyMatrix& m);
MPoly det(const SymLinMatrix& m);

// Submatrix with the given rows/columns removed (each list sorted ascending).
PolyMatrix remove_rows_cols(const PolyMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols);
MPoly minor_det(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// M(T) = sum_k T_k M^k with M^k the rank-1 matrix of loop-table column k.
SymLinMatrix graph_matrix(const Graph& g, const LoopTable& table);

// The graph polynomial, two independent ways: as the determinant of the graph
// matrix for a BFS cycle basis, and as the sum over spanning trees (spanning
// forests when disconnected) of the product of the edge variables outside the
// tree. Both are polynomials in the edge variables T_0..T_{N-1}.
MPoly psi_det(const Graph& g);
MPoly psi_det(const Graph& g, const LoopTable& table);
MPoly psi_trees(const Graph& g);

// Renaming of the graph matrix in the style used for hand computations: every
// nonzero off-diagonal entry (necessarily a signed single edge variable)
// becomes a fresh A-variable, every diagonal entry with an edge private to its
// loop becomes a fresh B-variable, and the remaining diagonal entries are
// rewritten as signed sums of A-variables. Fails when an edge occurs in more
// than one off-diagonal entry.
struct RenamedGraphMatrix {
    SymLinMatrix matrix;
    std::vector<std::string> var_names; // A0.., B<i>..
};
RenamedGraphMatrix renamed_graph_matrix(const Graph& g, const LoopTable& table);

} // namespace graphyps

#endif
