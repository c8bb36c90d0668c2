/* Tests for checked arithmetic, exact matrices and the linear solver. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grs/exactlin.hpp"

#include <cstdint>
#include <limits>

using namespace grs;

TEST_CASE("checked arithmetic detects 64-bit overflow") {
    const int64_t big = std::numeric_limits<int64_t>::max();
    const int64_t low = std::numeric_limits<int64_t>::min();
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_sub(2, 5) == -3);
    CHECK(checked_mul(-4, 6) == -24);
    CHECK(checked_neg(7) == -7);
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_sub(low, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK_THROWS_AS(checked_neg(low), OverflowError);
}

TEST_CASE("vector arithmetic") {
    IntVec a{1, -2, 3};
    IntVec b{4, 5, -6};
    CHECK(a + b == IntVec{5, 3, -3});
    CHECK(a - b == IntVec{-3, -7, 9});
    CHECK(-a == IntVec{-1, 2, -3});
    CHECK(a.scaled(-2) == IntVec{-2, 4, -6});
    CHECK(IntVec(3).is_zero());
    CHECK_FALSE(a.is_zero());
    CHECK(IntVec::unit(3, 1) == IntVec{0, 1, 0});
}

TEST_CASE("matrix product of two reflections") {
    IntMat r_star = IntMat::from_rows({{-1, -2}, {0, 1}});
    IntMat r_one = IntMat::from_rows({{1, 0}, {-2, -1}});
    IntMat cox = IntMat::from_rows({{3, 2}, {-2, -1}});
    CHECK(mat_mul(r_star, r_one) == cox);
    CHECK(mat_mul(cox, IntMat::identity(2)) == cox);
}

TEST_CASE("matrix apply and transpose") {
    IntMat m = IntMat::from_rows({{1, 2}, {3, 4}});
    CHECK(m.apply(IntVec{1, -1}) == IntVec{-1, -1});
    CHECK(m.transpose() == IntMat::from_rows({{1, 3}, {2, 4}}));
    CHECK(m + (-m) == IntMat(2));
}

TEST_CASE("determinant via fraction-free elimination") {
    CHECK(IntMat::identity(4).det() == 1);
    CHECK(IntMat::from_rows({{3, 2}, {-2, -1}}).det() == 1);
    CHECK(IntMat::from_rows({{2, 0}, {0, 3}}).det() == 6);
    CHECK(IntMat::from_rows({{1, 2}, {2, 4}}).det() == 0);
    /* Zero pivot forces a row swap. */
    CHECK(IntMat::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}).det() == -1);
    CHECK(IntMat::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}).det() == 4);
}

TEST_CASE("unimodular inverse") {
    IntMat m = IntMat::from_rows({{-1, -2}, {2, 3}});
    CHECK(mat_inverse_unimodular(m) == IntMat::from_rows({{3, 2}, {-2, -1}}));
    CHECK_THROWS_AS(mat_inverse_unimodular(IntMat::from_rows({{2, 0}, {0, 3}})),
                    NotUnimodular);
    CHECK_THROWS_AS(mat_inverse_unimodular(IntMat::from_rows({{1, 1}, {1, 1}})),
                    NotUnimodular);
}

TEST_CASE("matrix powers with negative exponent") {
    IntMat t = IntMat::from_rows({{0, -1}, {1, 2}});
    CHECK(mat_pow(t, 0) == IntMat::identity(2));
    CHECK(mat_pow(t, 2) == IntMat::from_rows({{-1, -2}, {2, 3}}));
    CHECK(mat_pow(t, -2) == IntMat::from_rows({{3, 2}, {-2, -1}}));
    CHECK(mat_mul(mat_pow(t, 5), mat_pow(t, -5)) == IntMat::identity(2));
}

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(0, 7) == Rat(0, 1));
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 2) == Rat(0));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(Rat(5).is_integer());
    CHECK_FALSE(Rat(5, 2).is_integer());
    CHECK(to_string(Rat(-3, 2)) == "-3/2");
    CHECK(to_string(Rat(4)) == "4");
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

/* The 2x2 system whose unique solution is the upper-triangular form
 * [[1,2],[0,1]]: symmetrization against the pairing [[2,2],[2,2]] plus
 * the duality relations against the transformation [[3,2],[-2,-1]]. */
static std::vector<LinearConstraint> small_constraints(bool with_duality) {
    std::vector<LinearConstraint> cs;
    cs.push_back({{{0, 2}}, 2});
    cs.push_back({{{1, 1}, {2, 1}}, 2});
    cs.push_back({{{3, 2}}, 2});
    if (with_duality) {
        cs.push_back({{{0, 4}, {1, -2}}, 0});
        cs.push_back({{{0, 2}, {1, -1}, {2, 1}}, 0});
        cs.push_back({{{2, 3}, {3, -2}, {1, 1}}, 0});
        cs.push_back({{{2, 2}}, 0});
    }
    return cs;
}

TEST_CASE("bilinear solver: unique integral solution") {
    auto sol = solve_bilinear_system(2, small_constraints(true));
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.matrix == IntMat::from_rows({{1, 2}, {0, 1}}));
}

TEST_CASE("bilinear solver: underdetermined system reports freedom") {
    auto sol = solve_bilinear_system(2, small_constraints(false));
    REQUIRE(sol.status == SolveStatus::NonUnique);
    CHECK(sol.freedom == 1);
}

TEST_CASE("bilinear solver: inconsistent system") {
    auto cs = small_constraints(true);
    cs.push_back({{{0, 1}}, 5});
    auto sol = solve_bilinear_system(2, cs);
    CHECK(sol.status == SolveStatus::NoSolution);
}

TEST_CASE("bilinear solver: non-integral solution is rejected") {
    std::vector<LinearConstraint> cs;
    cs.push_back({{{0, 2}}, 1});
    for (std::size_t i = 1; i < 4; ++i) cs.push_back({{{i, 1}}, 0});
    CHECK(solve_bilinear_system(2, cs).status == SolveStatus::NoSolution);
}

TEST_CASE("bilinear solver: repeated unknown in one constraint accumulates") {
    std::vector<LinearConstraint> cs;
    cs.push_back({{{0, 1}, {0, 1}}, 4});
    auto sol = solve_bilinear_system(1, cs);
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.matrix.at(0, 0) == 2);
}
