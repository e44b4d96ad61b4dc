#ifndef GRAPHYPS_IDENTITIES_HPP
#define GRAPHYPS_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "graphyps/polyalg.hpp"

namespace graphyps {

// Symmetric matrix of linear forms whose last row/column consists of
// designated border entries a_0..a_n, each either zero or a plain variable,
// all nonzero ones mutually distinct. Minor notation below indexes the full
// (n+1)x(n+1) matrix 0..n.
class BorderedSymMatrix {
public:
    explicit BorderedSymMatrix(SymLinMatrix m);

    unsigned size() const { return m_.size(); }          // n+1
    unsigned border_index() const { return size() - 1; } // n
    unsigned nvars() const { return m_.nvars(); }
    const SymLinMatrix& matrix() const { return m_; }
    const PolyMatrix& poly_matrix() const { return pm_; }

    // a_i as a polynomial (zero when the border entry is zero)
    MPoly border_entry(unsigned i) const;

    // determinant of the principal k x k block starting at row/column i
    MPoly principal_minor_from(unsigned i, unsigned k) const;
    // I_k: the leading principal k x k minor (i = 0)
    MPoly principal_minor(unsigned k) const;
    // S_t: rows 0..t-1 against columns 1..t
    MPoly step_minor(unsigned t) const;
    // minor of the interior n x n block with row i and column j removed
    MPoly interior_minor(unsigned i, unsigned j) const;
    MPoly det() const;

    // G_n = sum_{0<=i,j<=n-1} (-1)^{i+j} a_i a_j I_n(i;j); quadratic in the
    // border entries, and det = a_n I_n - G_n.
    MPoly border_quadratic() const;
    // Li_n = a_{n-1} I_{n-1} + sum_{0<=i<=n-2} (-1)^{i+n-1} a_i I_n(i;n-1)
    MPoly border_linear() const;

private:
    SymLinMatrix m_;
    PolyMatrix pm_;
};

// M(i;j)M(k;t) - M(k;j)M(i;t) == det(M) * M(i,k;j,t), exactly, for i < k and
// j < t; a crossed ordering negates the right-hand side (the left side is
// antisymmetric in each index pair, the two-line minor is not). Requires
// i != k, j != t. A modular spot evaluation runs first; the exact expansion
// is authoritative.
bool dodgson_identity_holds(const PolyMatrix& m, int i, int j, int k, int t);

// For symmetric matrices: I_n I^1_n - I^1_{n-1} I_{n+1} == (S_n)^2.
bool corner_minor_square_identity_holds(const PolyMatrix& m);

// det == a_n I_n - G_n as an exact polynomial identity.
bool border_decomposition_holds(const BorderedSymMatrix& m);

struct CongruenceCheck {
    bool hypothesis_ok; // false: the check below ran outside its hypothesis
    bool holds;
};

// I_{n-1} G_n - Li_n^2 divisible by I_n; hypothesis: I_{n-1} not divisible by
// I_n. Outside the hypothesis the divisibility is still reported (never
// asserted by callers).
CongruenceCheck border_square_congruence(const BorderedSymMatrix& m);

// When I_{n-1} is divisible by I_n, G_n is congruent mod I_n to its
// truncation that forgets a_{n-1}: sum a_i^2 I_n(i;i) +
// 2 sum_{i<j} (-1)^{i+j} a_i a_j I_n(i;j), sums over 0..n-2.
CongruenceCheck degenerate_border_congruence(const BorderedSymMatrix& m);

// Checkable precondition of the projection step used after the congruences:
// no interior entry of the matrix involves a_{n-1}.
bool interior_independent_of_second_border(const BorderedSymMatrix& m);

// Randomized self-test over all the identities above: `trials` random integer
// matrices per size in [min_size, max_size], entries in [-9,9], plus symbolic
// graph matrices. Returns one pass/fail line per identity.
struct SelfTestLine {
    std::string name;
    unsigned long long cases;
    bool pass;
};
std::vector<SelfTestLine> identities_selftest(int min_size, int max_size, int trials,
                                              uint64_t seed);

} // namespace graphyps

#endif
