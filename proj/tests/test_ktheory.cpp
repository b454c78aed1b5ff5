#include "doctest.h"
#include "toricsg/ktheory.hpp"

using namespace toricsg;

TEST_CASE("structure matrices from the asymptotic generators") {
    auto [m1, p1] = structure_matrices({1, 0}, {0, 1});
    CHECK(m1 == IntMatrix2::identity());
    CHECK(p1 == IntMatrix2::identity());

    auto [m2, p2] = structure_matrices({2, -1}, {2, 1});
    CHECK(m2 == IntMatrix2{1, -2, 1, 2});
    CHECK(p2 == IntMatrix2{2, 2, -1, 1});
    CHECK(m2.det() == 4);

    auto [m3, p3] = structure_matrices({1, 0}, {1, 3});
    CHECK(m3 == IntMatrix2{3, -1, 0, 1});
    CHECK(m3.det() == 3);

    CHECK_THROWS_AS(structure_matrices({0, 1}, {1, 0}), NotOrdered);
    CHECK_THROWS_AS(structure_matrices({1, 0}, {2, 0}), NotOrdered);
}

TEST_CASE("M * Mperp = detM * identity over sample pairs") {
    std::vector<std::pair<Vec2, Vec2>> pairs{
        {{1, 0}, {0, 1}}, {{2, -1}, {2, 1}}, {{1, 0}, {1, 3}}, {{3, -2}, {1, 4}}};
    for (auto [a1, a2] : pairs) {
        auto [M, Mperp] = structure_matrices(a1, a2);
        i64 det = M.det();
        CHECK(det == cross(a1, a2));
        CHECK(M * Mperp == IntMatrix2{det, 0, 0, det});
        CHECK(Mperp.det() == det);
    }
}

TEST_CASE("k-theory of the named semigroups") {
    auto n2 = k_theory(ToricSemigroup::validate({{1, 0}, {0, 1}}));
    CHECK(n2.K0 == AbelianGroup{1, {}});
    CHECK(n2.K1.is_trivial());
    CHECK(n2.detM == 1);

    auto cone = k_theory(ToricSemigroup::validate({{2, -1}, {1, 0}, {2, 1}}));
    CHECK(cone.K0 == AbelianGroup{1, {4}});
    CHECK(cone.K1.is_trivial());
    CHECK(cone.detM == 4);
    CHECK(cone.sf_quotient == AbelianGroup{0, {4}});
    CHECK(cone.snf_factors == std::vector<i64>{1, 4});

    // non-saturated but torsion-free
    auto axes = k_theory(ToricSemigroup::validate({{2, 0}, {3, 0}, {0, 1}}));
    CHECK(axes.detM == 1);
    CHECK(axes.K0 == AbelianGroup{1, {}});
    CHECK(axes.K1.is_trivial());
}

TEST_CASE("index map values") {
    {
        Oracle o(ToricSemigroup::validate({{1, 0}, {0, 1}}));
        CHECK(index_map(o, {1, 1}, 1) == 1);
        CHECK(index_map(o, {1, 1}, 2) == 1);
    }
    {
        Oracle o(ToricSemigroup::validate({{2, -1}, {1, 0}, {2, 1}}));
        CHECK(index_map(o, {1, 0}, 1) == 1);
        CHECK(index_map(o, {1, 0}, 2) == 1);
        CHECK(index_map(o, {2, 0}, 1) == 2);
        CHECK(index_map(o, {2, 0}, 2) == 2);

        CHECK_THROWS_AS((void)index_map(o, {1, 1}, 1), NotMember);   // outside the cone
        CHECK_THROWS_AS((void)index_map(o, {2, -1}, 1), OnFace);
        CHECK(index_map(o, {2, -1}, 2) == 4);  // on F1 but off F2
    }
}

TEST_CASE("index map vanishes exactly on the face line") {
    Oracle o(ToricSemigroup::validate({{1, 0}, {0, 1}}));
    for (i64 k = 1; k <= 5; ++k) {
        CHECK_THROWS_AS((void)index_map(o, {k, 0}, 1), OnFace);
        CHECK(index_map(o, {k, 0}, 2) == k);
    }
}
