#include <doctest.h>

#include "graphyps/families.hpp"
#include "graphyps/mpoly.hpp"
#include "graphyps/polyalg.hpp"

using namespace graphyps;

namespace {

MPoly var(unsigned nvars, unsigned v) { return MPoly::variable(nvars, v); }

} // namespace

TEST_CASE("product of sum and difference") {
    auto a1 = var(2, 0), a2 = var(2, 1);
    MPoly lhs = (a1 + a2) * (a1 - a2);
    MPoly rhs = a1 * a1 - a2 * a2;
    CHECK(lhs == rhs);
    CHECK(lhs.nterms() == 2);
}

TEST_CASE("evaluation at the all-ones point") {
    MPoly p = var(3, 0) + var(3, 1) + var(3, 2);
    std::vector<i64> ones(3, 1);
    CHECK(p.evaluate(ones) == 3);
}

TEST_CASE("substitution keeps zigzag coefficients in {0,1}") {
    MPoly psi = psi_trees(zigzag(5));
    for (unsigned v = 0; v < psi.nvars(); ++v) {
        MPoly cut = psi.substitute(v, 0);
        CHECK(cut.coefficients_all_one());
        CHECK(cut.is_multilinear());
    }
}

TEST_CASE("canonical form merges and drops terms") {
    std::vector<std::pair<std::vector<uint8_t>, i64>> terms;
    terms.push_back({{1, 0}, 2});
    terms.push_back({{0, 1}, 5});
    terms.push_back({{1, 0}, -2}); // cancels the first
    MPoly p = MPoly::from_terms(2, std::move(terms));
    CHECK(p.nterms() == 1);
    CHECK(p.coef(0) == 5);
}

TEST_CASE("degree queries") {
    auto x = var(2, 0), y = var(2, 1);
    MPoly p = x * x * y + y;
    CHECK(p.total_degree() == 3);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(1) == 1);
    CHECK_FALSE(p.is_multilinear());
    CHECK_FALSE(p.is_homogeneous());
    CHECK((x * y).is_homogeneous());
}

TEST_CASE("divisibility by a single variable") {
    auto a1 = var(3, 0), a2 = var(3, 1), a3 = var(3, 2);
    CHECK(divides(a1, a1 * (a2 + a3)));
    CHECK_FALSE(divides(a1, a1 * a2 + a3));
}

TEST_CASE("divisibility by a linear binomial") {
    auto a1 = var(2, 0), a2 = var(2, 1);
    CHECK(divides(a1 + a2, a1 * a1 - a2 * a2));
    CHECK_FALSE(divides(a1 + a2, a1 * a1 + a2 * a2));
    CHECK(divides(a1 + a2, MPoly(2))); // zero is divisible by anything
}

TEST_CASE("divisor must be linear in some variable") {
    auto x = var(1, 0);
    CHECK_THROWS_AS((void)divides(x * x, x * x * x), Error);
    CHECK_THROWS_AS((void)divides(MPoly(1), x), Error);
}

TEST_CASE("constant divisors reduce to integer divisibility") {
    auto x = var(1, 0);
    CHECK(divides(MPoly::constant(1, 3), x.scaled(6) + MPoly::constant(1, 9)));
    CHECK_FALSE(divides(MPoly::constant(1, 3), x.scaled(6) + MPoly::constant(1, 8)));
}

TEST_CASE("variable remapping") {
    auto x = var(2, 0), y = var(2, 1);
    MPoly p = x * y + x;
    std::vector<int> map = {2, 0};
    MPoly q = p.map_vars(map, 3);
    CHECK(q == var(3, 2) * var(3, 0) + var(3, 2));
}

TEST_CASE("overflow in coefficient arithmetic is detected") {
    MPoly big = MPoly::constant(1, i64(1) << 62);
    CHECK_THROWS_AS((void)(big * MPoly::constant(1, 4)), Error);
}

TEST_CASE("linear form to polynomial") {
    LinearForm f;
    f.add_var(0, 1);
    f.add_var(1, -1);
    f.add_var(1, 1); // cancels
    f.add_constant(7);
    MPoly p = f.to_mpoly(2);
    CHECK(p == var(2, 0) + MPoly::constant(2, 7));
    CHECK(f.coeff(1) == 0);
}
