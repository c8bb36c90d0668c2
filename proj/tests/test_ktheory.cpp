/* Tests for the quiver presentation, the Euler matrix of the simple
 * modules, class-level mutations and the lattice cross-checks. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grs/ktheory.hpp"
#include "grs/weyl.hpp"

#include <array>
#include <cstdint>

using namespace grs;

namespace {

int64_t total(const IntMat& m) {
    int64_t sum = 0;
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j)
            sum += m.at(i, j);
    return sum;
}

const std::array<std::array<int64_t, 3>, 9> kAllSystems{{{1, 1, 1},
                                                         {1, 1, 2},
                                                         {1, 1, 3},
                                                         {1, 2, 2},
                                                         {2, 2, 2},
                                                         {2, 2, 3},
                                                         {2, 3, 3},
                                                         {2, 3, 4},
                                                         {2, 3, 5}}};

} // namespace

TEST_CASE("quiver shape for a rank-two system") {
    auto q = build_octopus_quiver(build_system(1, 1, 1));
    CHECK(q.mu == 2);
    CHECK(total(q.arrow_count) == 0);
    CHECK(q.relation_count.at(1, 0) == 2);
    CHECK(total(q.relation_count) == 2);
}

TEST_CASE("quiver shape with three short arms") {
    auto sys = build_system(2, 2, 2);
    auto q = build_octopus_quiver(sys);
    CHECK(q.mu == 5);
    for (int arm = 1; arm <= 3; ++arm) {
        std::size_t first = sys.arm_index(arm, 1);
        CHECK(q.arrow_count.at(1, first) == 1);
        CHECK(q.arrow_count.at(first, 0) == 1);
    }
    CHECK(total(q.arrow_count) == 6);
    CHECK(q.relation_count.at(1, 0) == 2);
    CHECK(total(q.relation_count) == 2);
}

TEST_CASE("quiver chain arrows along a long arm") {
    auto sys = build_system(2, 3, 5);
    auto q = build_octopus_quiver(sys);
    CHECK(q.arrow_count.at(sys.arm_index(3, 1), sys.arm_index(3, 2)) == 1);
    CHECK(q.arrow_count.at(sys.arm_index(3, 3), sys.arm_index(3, 4)) == 1);
    CHECK(q.arrow_count.at(sys.arm_index(3, 1), 0) == 1);
    CHECK(q.arrow_count.at(sys.arm_index(3, 4), 0) == 0);
    CHECK(total(q.arrow_count) == 10);
}

TEST_CASE("Euler matrix from the quiver") {
    auto q1 = build_octopus_quiver(build_system(1, 1, 1));
    CHECK(euler_matrix_from_quiver(q1) == IntMat::from_rows({{1, 0}, {2, 1}}));

    auto q2 = build_octopus_quiver(build_system(2, 2, 2));
    CHECK(euler_matrix_from_quiver(q2) == IntMat::from_rows({{1, 0, 0, 0, 0},
                                                             {2, 1, -1, -1, -1},
                                                             {-1, 0, 1, 0, 0},
                                                             {-1, 0, 0, 1, 0},
                                                             {-1, 0, 0, 0, 1}}));

    for (auto [a1, a2, a3] : kAllSystems) {
        auto sys = build_system(a1, a2, a3);
        IntMat m = euler_matrix_from_quiver(build_octopus_quiver(sys));
        for (std::size_t v = 0; v < sys.mu; ++v)
            CHECK(m.at(v, v) == 1);
    }
}

TEST_CASE("mutation with vanishing pairing leaves the class alone") {
    auto sys = build_system(2, 2, 2);
    IntMat chi = euler_form_triangular(sys);
    IntVec e = simple_root(sys, sys.arm_index(1, 1));
    IntVec f = simple_root(sys, sys.arm_index(2, 1));
    REQUIRE(bilinear(chi, e, f) == 0);
    CHECK(mutate_class(e, f, chi, MutationSide::Right) == e);
    CHECK(mutate_class(e, f, chi, MutationSide::Left) == f);
}

TEST_CASE("mutations on consecutive simples invert each other") {
    auto sys = build_system(2, 3, 4);
    IntMat chi = euler_form_triangular(sys);
    ClassTuple simples = simples_class_tuple(sys);
    for (std::size_t i = 0; i + 1 < sys.mu; ++i) {
        const IntVec& e = simples.entries[i];
        const IntVec& f = simples.entries[i + 1];
        IntVec right = mutate_class(e, f, chi, MutationSide::Right);
        CHECK(mutate_class(f, right, chi, MutationSide::Left) == e);
        IntVec left = mutate_class(e, f, chi, MutationSide::Left);
        CHECK(mutate_class(left, e, chi, MutationSide::Right) == f);
    }
}

TEST_CASE("simple-module classes in small systems") {
    ClassTuple t1 = simples_class_tuple(build_system(1, 1, 1));
    CHECK(t1.entries == std::vector<IntVec>{{2, -1}, {1, 0}});

    ClassTuple t2 = simples_class_tuple(build_system(1, 1, 2));
    CHECK(t2.entries ==
          std::vector<IntVec>{{2, -1, 0}, {-1, 0, -1}, {1, 0, 0}});

    ClassTuple t3 = simples_class_tuple(build_system(2, 2, 2));
    CHECK(t3.entries == std::vector<IntVec>{{2, -1, 0, 0, 0},
                                            {-1, 0, -1, 0, 0},
                                            {-1, 0, 0, -1, 0},
                                            {-1, 0, 0, 0, -1},
                                            {1, 0, 0, 0, 0}});
}

TEST_CASE("simple-module classes in closed form") {
    for (auto [a1, a2, a3] : kAllSystems) {
        auto sys = build_system(a1, a2, a3);
        ClassTuple t = simples_class_tuple(sys);
        REQUIRE(t.entries.size() == sys.mu);
        IntVec d = delta(sys);
        IntVec one = simple_root(sys, SystemDescriptor::one_index);
        CHECK(t.entries.front() == one + d.scaled(2));
        CHECK(t.entries.back() == one + d);
        std::size_t slot = 1;
        for (int arm = 1; arm <= 3; ++arm) {
            for (int j = 1; j < sys.a[static_cast<std::size_t>(arm - 1)]; ++j) {
                IntVec arm_root = simple_root(sys, sys.arm_index(arm, j));
                IntVec expected =
                    j == 1 ? -(one + d + arm_root) : -arm_root;
                CHECK(t.entries[slot] == expected);
                ++slot;
            }
        }
    }
}

TEST_CASE("coordinate matrix is unimodular and conjugates the form") {
    for (auto [a1, a2, a3] : kAllSystems) {
        auto sys = build_system(a1, a2, a3);
        ClassTuple t = simples_class_tuple(sys);
        IntMat e = simples_coordinate_matrix(sys, t);
        int64_t det = e.det();
        CHECK((det == 1 || det == -1));
        IntMat chi = euler_form_triangular(sys);
        IntMat q = euler_matrix_from_quiver(build_octopus_quiver(sys));
        CHECK(mat_mul(e.transpose(), mat_mul(chi, e)) == q);
    }
}

TEST_CASE("braid-style mutation moves preserve unimodularity") {
    auto sys = build_system(2, 2, 3);
    IntMat chi = euler_form_triangular(sys);
    ClassTuple t = simples_class_tuple(sys);
    for (std::size_t i = 0; i + 1 < sys.mu; ++i) {
        IntVec mutated =
            mutate_class(t.entries[i], t.entries[i + 1], chi, MutationSide::Right);
        t.entries[i] = t.entries[i + 1];
        t.entries[i + 1] = mutated;
        IntMat e = simples_coordinate_matrix(sys, t);
        int64_t det = e.det();
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("spherical class identity report") {
    for (auto [a1, a2, a3] : kAllSystems) {
        auto rep = verify_spherical_class_identity(build_system(a1, a2, a3));
        for (const auto& c : rep.checks) {
            INFO(rep.suite, ": ", c.name, " ", c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("twist of the star root is the one root") {
    auto sys = build_system(2, 3, 5);
    IntMat twist = twist_matrix(sys).matrix;
    CHECK(twist.apply(simple_root(sys, 0)) == simple_root(sys, 1));
    CHECK(twist.apply(delta(sys)) == delta(sys));
}

TEST_CASE("quiver cross-check report") {
    for (auto [a1, a2, a3] : kAllSystems) {
        auto rep = verify_quiver_cross_check(build_system(a1, a2, a3));
        for (const auto& c : rep.checks) {
            INFO(rep.suite, ": ", c.name, " ", c.detail);
            CHECK(c.pass);
        }
    }
}
