#include <cstdlib>
#include <limits>

#include "doctest.h"
#include "toricsg/lattice.hpp"

using namespace toricsg;

TEST_CASE("ext_gcd basics") {
    auto z = ext_gcd(0, 0);
    CHECK(z.g == 0);
    CHECK(z.u * 0 + z.v * 0 == 0);

    auto e = ext_gcd(6, 4);
    CHECK(e.g == 2);
    CHECK(e.u * 6 + e.v * 4 == 2);

    auto o = ext_gcd(2, 1);
    CHECK(o.g == 1);
    CHECK(o.u * 2 + o.v * 1 == 1);
}

TEST_CASE("ext_gcd identity over a grid, including negatives") {
    for (i64 a = -12; a <= 12; ++a)
        for (i64 b = -12; b <= 12; ++b) {
            auto e = ext_gcd(a, b);
            CHECK(e.g >= 0);
            CHECK(e.u * a + e.v * b == e.g);
            if (e.g != 0) {
                CHECK(a % e.g == 0);
                CHECK(b % e.g == 0);
            }
        }
}

TEST_CASE("smith normal form on the named matrices") {
    auto id = smith_normal_form(IntMatrix2::identity());
    CHECK(id.d1 == 1);
    CHECK(id.d2 == 1);

    // hand row/column reduction of [[1,-2],[1,2]]:
    // R2 -= R1 -> [[1,-2],[0,4]]; C2 += 2*C1 -> diag(1,4)
    auto m = smith_normal_form(IntMatrix2{1, -2, 1, 2});
    CHECK(m.d1 == 1);
    CHECK(m.d2 == 4);

    auto d = smith_normal_form(IntMatrix2{2, 0, 0, 2});
    CHECK(d.d1 == 2);
    CHECK(d.d2 == 2);
}

TEST_CASE("smith normal form invariants over a matrix grid") {
    for (i64 a = -4; a <= 4; ++a)
        for (i64 b = -4; b <= 4; ++b)
            for (i64 c = -4; c <= 4; ++c)
                for (i64 d = -4; d <= 4; ++d) {
                    IntMatrix2 A{a, b, c, d};
                    auto s = smith_normal_form(A);
                    IntMatrix2 D = s.U * A * s.V;
                    CHECK(D == IntMatrix2{s.d1, 0, 0, s.d2});
                    CHECK(std::abs(s.U.det()) == 1);
                    CHECK(std::abs(s.V.det()) == 1);
                    CHECK(s.d1 >= 0);
                    CHECK(s.d2 >= 0);
                    if (s.d1 != 0) CHECK(s.d2 % s.d1 == 0);
                    CHECK(s.d1 * s.d2 == std::abs(A.det()));
                }
}

TEST_CASE("cokernel invariants") {
    CHECK(cokernel_invariants(IntMatrix2::identity()).is_trivial());
    CHECK(cokernel_invariants(IntMatrix2{1, -2, 1, 2}) == AbelianGroup{0, {4}});
    CHECK(cokernel_invariants(IntMatrix2{0, 0, 0, 0}) == AbelianGroup{2, {}});
}

TEST_CASE("cokernel of A equals cokernel of adjugate(A) when det != 0") {
    for (i64 a = -4; a <= 4; ++a)
        for (i64 b = -4; b <= 4; ++b)
            for (i64 c = -4; c <= 4; ++c)
                for (i64 d = -4; d <= 4; ++d) {
                    IntMatrix2 A{a, b, c, d};
                    if (A.det() == 0) continue;
                    CHECK(cokernel_invariants(A) == cokernel_invariants(A.adjugate()));
                }
}

TEST_CASE("adjugate identity") {
    for (i64 a = -3; a <= 3; ++a)
        for (i64 b = -3; b <= 3; ++b)
            for (i64 c = -3; c <= 3; ++c)
                for (i64 d = -3; d <= 3; ++d) {
                    IntMatrix2 A{a, b, c, d};
                    i64 det = A.det();
                    CHECK(A.adjugate() * A == IntMatrix2{det, 0, 0, det});
                }
}

TEST_CASE("solve_diophantine examples") {
    std::vector<Vec2> id{{1, 0}, {0, 1}};
    auto c1 = solve_diophantine(id, {3, -2});
    REQUIRE(c1.has_value());
    CHECK(*c1 == std::vector<i64>{3, -2});

    std::vector<Vec2> g2{{2, 0}, {3, 0}, {0, 1}};
    auto c2 = solve_diophantine(g2, {1, 0});
    REQUIRE(c2.has_value());
    CHECK(2 * (*c2)[0] + 3 * (*c2)[1] == 1);
    CHECK((*c2)[2] == 0);

    std::vector<Vec2> g3{{2, 0}, {0, 2}};
    CHECK(!solve_diophantine(g3, {1, 0}).has_value());
}

TEST_CASE("solve_diophantine returns exact solutions over small inputs") {
    std::vector<Vec2> gens{{2, -1}, {1, 0}, {2, 1}};
    for (i64 x = -6; x <= 6; ++x)
        for (i64 y = -6; y <= 6; ++y) {
            auto c = solve_diophantine(gens, {x, y});
            REQUIRE(c.has_value());  // these columns span Z^2
            Vec2 acc{0, 0};
            for (std::size_t j = 0; j < gens.size(); ++j) acc = acc + (*c)[j] * gens[j];
            CHECK(acc == Vec2{x, y});
        }
}

TEST_CASE("lattice basis of columns") {
    std::vector<Vec2> cols{{2, 0}, {0, 2}};
    IntMatrix2 B = lattice_basis_of_columns(cols);
    CHECK(std::abs(B.det()) == 4);

    std::vector<Vec2> rank1{{2, 4}, {1, 2}};
    IntMatrix2 B1 = lattice_basis_of_columns(rank1);
    CHECK(B1.det() == 0);
}

TEST_CASE("checked arithmetic detects overflow") {
    i64 big = std::numeric_limits<i64>::max();
    CHECK_THROWS_AS((void)chk_add(big, 1), OverflowError);
    CHECK_THROWS_AS((void)chk_mul(big, 2), OverflowError);
    CHECK(chk_add(big, 0) == big);
}

TEST_CASE("abelian group order and naming") {
    CHECK(AbelianGroup{0, {}}.order() == 1);
    CHECK(AbelianGroup{0, {4}}.order() == 4);
    CHECK(AbelianGroup{1, {2}}.order() == 0);
    CHECK(AbelianGroup{1, {4}}.str() == "Z + Z/4");
    CHECK(AbelianGroup{0, {}}.str() == "0");
}
