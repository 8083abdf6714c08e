#include <doctest.h>

#include <random>
#include <vector>

#include "kdyck/formulas.hpp"
#include "kdyck/paths.hpp"
#include "kdyck/series.hpp"

using namespace kdyck;

namespace {

MultiPoly expected_coeff(std::size_t k, std::size_t t, std::size_t m) {
    // census of (k,t)-paths with m downs, tallied by residue signature
    MultiPoly out(k);
    enumerate_paths(k, m, t, [&](const KDyckPath& p) {
        ResidueStats h = residue_histogram(p);
        MultiPoly::Exponents e(h.count.begin(), h.count.end());
        out.add_term(e, 1);
    });
    return out;
}

} // namespace

TEST_CASE("MultiPoly arithmetic") {
    MultiPoly one = MultiPoly::constant(2, 1);
    MultiPoly r1 = MultiPoly::marker(2, 1);
    MultiPoly r2 = MultiPoly::marker(2, 2);

    CHECK(one.total_count() == BigCount(1ul));
    CHECK(r1.term_count() == 1);
    CHECK(r1.count_at({1, 0}) == BigCount(1ul));
    CHECK(r1.count_at({0, 1}) == BigCount(0ul)); // absent term

    MultiPoly p = r1 + r2;
    CHECK(p.term_count() == 2);
    CHECK(p.total_count() == BigCount(2ul));

    MultiPoly q = p * p; // r1^2 + 2 r1 r2 + r2^2
    CHECK(q.count_at({2, 0}) == BigCount(1ul));
    CHECK(q.count_at({1, 1}) == BigCount(2ul));
    CHECK(q.count_at({0, 2}) == BigCount(1ul));
    CHECK(q.total_count() == BigCount(4ul));

    // cancellation erases the stored term entirely
    MultiPoly z = p;
    z -= p;
    CHECK(z.is_zero());

    // negative coefficients live inside but may not surface as counts
    MultiPoly neg = MultiPoly::constant(2, 0);
    neg -= r1;
    CHECK_THROWS_AS(neg.count_at({1, 0}), BadParameters);
    CHECK_THROWS_AS(neg.total_count(), BadParameters);

    CHECK_THROWS_AS(r1.count_at({1}), BadParameters); // arity mismatch
    CHECK_THROWS_AS(p += MultiPoly::marker(3, 1), OrderMismatch);
    CHECK_THROWS_AS(MultiPoly::marker(2, 3), BadParameters);
    CHECK_THROWS_AS(MultiPoly::marker(2, 0), BadParameters);
}

TEST_CASE("ZSeries ring operations") {
    ZSeries one = ZSeries::one(2, 4);
    ZSeries z = ZSeries::identity(2, 4);

    CHECK(coeff(one, 0) == MultiPoly::constant(2, 1));
    CHECK(coeff(z, 1) == MultiPoly::constant(2, 1));
    CHECK(coeff(z, 0).is_zero());
    CHECK_THROWS_AS(coeff(z, 5), OutOfRange);

    ZSeries z2 = multiply(z, z);
    CHECK(coeff(z2, 2) == MultiPoly::constant(2, 1));
    CHECK(coeff(z2, 1).is_zero());

    CHECK(add(z, z2) == add(z2, z));
    CHECK(subtract(add(z, z2), z2) == z);

    CHECK(shift(z, 2) == multiply(z2, z));
    CHECK(coeff(scale(z, MultiPoly::marker(2, 1)), 1) ==
          MultiPoly::marker(2, 1));

    ZSeries other(3, 4);
    CHECK_THROWS_AS(multiply(z, other), OrderMismatch);
    CHECK_THROWS_AS(add(z, ZSeries::one(2, 5)), OrderMismatch);
}

TEST_CASE("reciprocal inverts unit series") {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 10; ++trial) {
        ZSeries x = ZSeries::one(2, 5);
        for (std::size_t n = 1; n <= 5; ++n) {
            MultiPoly c(2);
            if (int a = pick(rng)) c += MultiPoly::constant(2, a);
            if (pick(rng) == 1) c += MultiPoly::marker(2, 1);
            if (pick(rng) == 1) c += MultiPoly::marker(2, 2);
            x.coeffs[n] = c;
        }
        CHECK(multiply(x, reciprocal(x)) == ZSeries::one(2, 5));
    }
    CHECK_THROWS_AS(reciprocal(ZSeries::identity(2, 4)), NonUnitConstantTerm);
}

TEST_CASE("butterfly fixed point") {
    for (std::size_t k = 2; k <= 4; ++k) {
        ZSeries B = solve_butterfly(k, 6);
        CHECK(coeff(B, 0).is_zero());
        CHECK(coeff(B, 1) == MultiPoly::constant(k, 1));

        MultiPoly sum_markers(k);
        for (std::size_t j = 1; j <= k; ++j)
            sum_markers += MultiPoly::marker(k, j);
        CHECK(coeff(B, 2) == sum_markers);

        // defining identity: B * prod_j (1 - r_j B) = z
        ZSeries prod = ZSeries::one(k, 6);
        for (std::size_t j = 1; j <= k; ++j)
            prod = multiply(prod, subtract(ZSeries::one(k, 6),
                                           scale(B, MultiPoly::marker(k, j))));
        CHECK(multiply(B, prod) == ZSeries::identity(k, 6));
    }
    CHECK_THROWS_AS(solve_butterfly(1, 4), BadParameters);
}

TEST_CASE("substitution collapses to the identity") {
    for (std::size_t k = 2; k <= 4; ++k)
        CHECK(verify_substitution(k, 6));
    CHECK(verify_substitution(2, 10));
}

TEST_CASE("marked generating function spot values") {
    ZSeries F = tree_gf(2, 0, 4);
    CHECK(coeff(F, 0).is_zero());
    CHECK(coeff(F, 1) == MultiPoly::constant(2, 1)); // the empty path
    CHECK(coeff(F, 2) == MultiPoly::marker(2, 2));   // UUD lands on level 0

    // m = 2: two paths land (0,2), one lands (1,1)
    MultiPoly m2(2);
    m2.add_term({0, 2}, 2);
    m2.add_term({1, 1}, 1);
    CHECK(coeff(F, 3) == m2);

    ZSeries G = tree_gf(2, 1, 4);
    // m = 1 at t = 1: UUD lands class 2, UDU lands class 1
    MultiPoly g1(2);
    g1.add_term({1, 0}, 1);
    g1.add_term({0, 1}, 1);
    CHECK(coeff(G, 3) == g1);

    MultiPoly g2(2);
    g2.add_term({2, 0}, 2);
    g2.add_term({1, 1}, 3);
    g2.add_term({0, 2}, 2);
    CHECK(coeff(G, 4) == g2);

    CHECK_THROWS_AS(tree_gf(2, 2, 8), BadParameters);  // t >= k
    CHECK_THROWS_AS(tree_gf(2, 1, 1), BadParameters);  // order < t + 1
}

TEST_CASE("series coefficients match the census") {
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t t = 0; t < k; ++t) {
            ZSeries F = tree_gf(k, t, t + 5);
            for (std::size_t m = 0; m <= 4 - t; ++m)
                CHECK(coeff(F, m + t + 1) == expected_coeff(k, t, m));
        }
}

TEST_CASE("series totals are Fuss-Catalan at t = 0") {
    for (std::size_t k = 2; k <= 4; ++k) {
        ZSeries F = tree_gf(k, 0, 7);
        for (std::size_t m = 0; m <= 6; ++m)
            CHECK(coeff(F, m + 1).total_count() == fuss_catalan(k, m));
    }
}
