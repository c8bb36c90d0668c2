/* Tests for reflections, the Coxeter transformation, the radical twist,
 * word evaluation and the identity suites. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grs/weyl.hpp"

#include <array>

using namespace grs;

static void check_report(const CheckReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(rep.suite, ": ", c.name, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("simple reflections of the rank-two system") {
    auto s = build_system(1, 1, 1);
    RootIndex idx(s);
    auto rs = reflection_matrix(idx, simple_root(s, 0));
    auto r1 = reflection_matrix(idx, simple_root(s, 1));
    CHECK(rs.matrix == IntMat::from_rows({{-1, -2}, {0, 1}}));
    CHECK(r1.matrix == IntMat::from_rows({{1, 0}, {-2, -1}}));
    CHECK(rs.preserves_form);
    CHECK(r1.preserves_form);
    CHECK(mat_mul(rs.matrix, rs.matrix) == IntMat::identity(2));
    CHECK_THROWS_AS(reflection_matrix(idx, delta(s)), NotARoot);
    CHECK_THROWS_AS(reflection_matrix(idx, IntVec{2, 0}), NotARoot);
}

TEST_CASE("reflections fix their mirror and negate the root") {
    auto s = build_system(2, 2, 3);
    RootIndex idx(s);
    IntVec d = delta(s);
    for (const auto& rho : idx.finite_roots()) {
        IntVec alpha = rho + d.scaled(1);
        auto r = reflection_matrix(idx, alpha);
        CHECK(r.preserves_form);
        CHECK(r.matrix.apply(alpha) == -alpha);
        CHECK(r.matrix.apply(d) == d);
        CHECK(mat_mul(r.matrix, r.matrix) == IntMat::identity(s.mu));
    }
}

TEST_CASE("Coxeter matrices of small systems") {
    CHECK(coxeter_matrix(build_system(1, 1, 1)).matrix ==
          IntMat::from_rows({{3, 2}, {-2, -1}}));
    CHECK(coxeter_matrix(build_system(2, 2, 2)).matrix ==
          IntMat::from_rows({{0, -1, 1, 1, 1},
                             {1, 2, -1, -1, -1},
                             {1, 1, -1, 0, 0},
                             {1, 1, 0, -1, 0},
                             {1, 1, 0, 0, -1}}));
    auto cm = coxeter_matrix(build_system(2, 3, 4));
    CHECK(cm.preserves_form);
    CHECK(cm.matrix.det() == 1);
}

TEST_CASE("Coxeter transformation is minus inverse-transpose of Euler form") {
    for (auto [a1, a2, a3] : {std::array<int64_t, 3>{1, 1, 1},
                              std::array<int64_t, 3>{1, 2, 2},
                              std::array<int64_t, 3>{2, 3, 3}}) {
        auto s = build_system(a1, a2, a3);
        IntMat c = euler_form_triangular(s);
        IntMat expected =
            -mat_mul(mat_inverse_unimodular(c), c.transpose());
        CHECK(coxeter_matrix(s).matrix == expected);
    }
}

TEST_CASE("twist matrix and its powers") {
    auto s = build_system(1, 1, 1);
    auto t = twist_matrix(s);
    CHECK(t.matrix == IntMat::from_rows({{0, -1}, {1, 2}}));
    CHECK(t.preserves_form);
    CHECK(mat_pow(t.matrix, 2) == IntMat::from_rows({{-1, -2}, {2, 3}}));
    CHECK(mat_pow(t.matrix, -2) == coxeter_matrix(s).matrix);

    auto s5 = build_system(2, 2, 2);
    IntMat t5 = twist_matrix(s5).matrix;
    for (std::size_t j = 2; j < s5.mu; ++j)
        CHECK(t5.apply(simple_root(s5, j)) == simple_root(s5, j));
    CHECK(t5.at(0, 0) == 0);
    CHECK(t5.at(0, 1) == -1);
    CHECK(t5.at(1, 0) == 1);
    CHECK(t5.at(1, 1) == 2);
}

TEST_CASE("twist power closed form") {
    auto s = build_system(1, 1, 2);
    IntMat t = twist_matrix(s).matrix;
    for (int64_t n = -4; n <= 4; ++n) {
        IntMat tn = mat_pow(t, n);
        for (std::size_t v = 0; v < s.mu; ++v)
            CHECK(twist_power_apply(s, n, simple_root(s, v)) ==
                  tn.apply(simple_root(s, v)));
    }
}

TEST_CASE("word evaluation") {
    auto s = build_system(1, 1, 1);
    RootIndex idx(s);
    IntMat r1 = reflection_matrix(idx, simple_root(s, 1)).matrix;

    auto conj = eval_word(s, {{LetterKind::Twist, 0},
                              {LetterKind::Reflection, 0},
                              {LetterKind::TwistInverse, 0}});
    CHECK(conj.matrix == r1);
    CHECK(conj.t_exponent == 0);

    auto sq = eval_word(s, {{LetterKind::Twist, 0}, {LetterKind::Twist, 0}});
    CHECK(sq.matrix == IntMat::from_rows({{-1, -2}, {2, 3}}));
    CHECK(sq.t_exponent == 2);

    auto empty = eval_word(s, {});
    CHECK(empty.matrix == IntMat::identity(2));
    CHECK(empty.t_exponent == 0);

    CHECK_THROWS_AS(eval_word(s, {{LetterKind::Reflection, 9}}),
                    std::out_of_range);
}

TEST_CASE("the double-edge pair fails both classical relations") {
    auto s = build_system(1, 1, 1);
    RootIndex idx(s);
    IntMat rs = reflection_matrix(idx, simple_root(s, 0)).matrix;
    IntMat r1 = reflection_matrix(idx, simple_root(s, 1)).matrix;
    CHECK(mat_mul(mat_mul(rs, r1), rs) == IntMat::from_rows({{-3, -4}, {2, 3}}));
    CHECK(mat_mul(mat_mul(r1, rs), r1) == IntMat::from_rows({{3, 2}, {-4, -3}}));
    CHECK(mat_mul(rs, r1) != mat_mul(r1, rs));
}

TEST_CASE("identity suites pass on small systems") {
    for (auto [a1, a2, a3] : {std::array<int64_t, 3>{1, 1, 1},
                              std::array<int64_t, 3>{1, 1, 2},
                              std::array<int64_t, 3>{1, 2, 2},
                              std::array<int64_t, 3>{2, 2, 2},
                              std::array<int64_t, 3>{2, 2, 3}}) {
        auto s = build_system(a1, a2, a3);
        check_report(verify_conjugation_identities(s, 7, 50));
        check_report(verify_power_identity(s));
        check_report(verify_coxeter_action_table(s));
        check_report(verify_artin_relations(s));
        check_report(verify_dual_twist(s));
    }
}

TEST_CASE("power identity exponents per family") {
    struct Row {
        std::array<int64_t, 3> a;
        int64_t m, ell;
    };
    for (const Row& row : {Row{{1, 1, 1}, 2, 1}, Row{{1, 1, 2}, 3, 2},
                           Row{{1, 1, 3}, 4, 3}, Row{{1, 2, 2}, 2, 2},
                           Row{{2, 2, 2}, 1, 2}, Row{{2, 2, 3}, 2, 6},
                           Row{{2, 3, 3}, 1, 6}, Row{{2, 3, 4}, 1, 12},
                           Row{{2, 3, 5}, 1, 30}}) {
        auto s = build_system(row.a[0], row.a[1], row.a[2]);
        Rat m = s.chi * Rat(s.ell);
        CHECK(m == Rat(row.m));
        CHECK(s.ell == row.ell);
        CHECK(mat_pow(twist_matrix(s).matrix, -row.m) ==
              mat_pow(coxeter_matrix(s).matrix, row.ell));
    }
}

TEST_CASE("Coxeter action on degenerate arms contributes delta") {
    auto s = build_system(1, 1, 1);
    IntMat cox = coxeter_matrix(s).matrix;
    IntVec expect = simple_root(s, 1) + delta(s).scaled(3);
    CHECK(cox.apply(simple_root(s, 0)) == expect);

    auto s2 = build_system(1, 1, 2);
    IntMat cox2 = coxeter_matrix(s2).matrix;
    IntVec expect2 = simple_root(s2, 1) + simple_root(s2, s2.arm_index(3, 1)) +
                     delta(s2).scaled(2);
    CHECK(cox2.apply(simple_root(s2, 0)) == expect2);
}
