#include <algorithm>

#include "doctest.h"
#include "test_oracles.hpp"
#include "toricsg/numsgp.hpp"

using namespace toricsg;
using toricsg::testing::naive_numerical_members;

TEST_CASE("normalize") {
    auto [d1, r1] = normalize_generators({1});
    CHECK(d1 == 1);
    CHECK(r1 == std::vector<i64>{1});

    auto [d2, r2] = normalize_generators({4, 6});
    CHECK(d2 == 2);
    CHECK(r2 == std::vector<i64>{2, 3});

    auto [d3, r3] = normalize_generators({2, 3});
    CHECK(d3 == 1);
    CHECK(r3 == std::vector<i64>{2, 3});

    CHECK_THROWS_AS(normalize_generators({}), EmptyInput);
}

TEST_CASE("gap analysis of {3,5}") {
    // frozen from the subset-sum oracle on [0, 20]
    auto oracle = naive_numerical_members({3, 5}, 20);
    std::vector<i64> oracle_gaps;
    for (i64 k = 1; k <= 20; ++k)
        if (!oracle[static_cast<std::size_t>(k)]) oracle_gaps.push_back(k);
    CHECK(oracle_gaps == std::vector<i64>{1, 2, 4, 7});

    auto ns = gap_analysis({3, 5});
    CHECK(ns.gaps == std::vector<i64>{1, 2, 4, 7});
    CHECK(ns.frobenius == 7);
    CHECK(ns.conductor == 8);
}

TEST_CASE("gap analysis edge cases") {
    auto full = gap_analysis({1});
    CHECK(full.gaps.empty());
    CHECK(full.frobenius == -1);
    CHECK(full.conductor == 0);

    auto ns = gap_analysis({2, 3});
    CHECK(ns.gaps == std::vector<i64>{1});
    CHECK(ns.frobenius == 1);
    CHECK(ns.conductor == 2);

    CHECK_THROWS_AS(gap_analysis({4, 6}), GcdNotOne);
}

TEST_CASE("membership") {
    auto ns = gap_analysis({3, 5});
    CHECK(ns.member(8));
    CHECK(!ns.member(7));
    CHECK(ns.member(0));
    CHECK(!ns.member(-1));
}

TEST_CASE("agreement with the subset-sum oracle") {
    std::vector<std::vector<i64>> cases{{3, 5},  {2, 3},   {2, 7},      {5, 7},
                                        {3, 7, 8}, {4, 6, 9}, {5, 6, 7, 8}, {1, 9}};
    for (const auto& gens : cases) {
        auto ns = gap_analysis(gens);
        i64 maxg = *std::max_element(gens.begin(), gens.end());
        i64 bound = ns.conductor + maxg;
        auto oracle = naive_numerical_members(gens, bound);
        for (i64 k = 0; k <= bound; ++k)
            CHECK(ns.member(k) == oracle[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("apery elements are minimal in their residue classes") {
    for (const auto& gens : std::vector<std::vector<i64>>{{3, 5}, {4, 7}, {5, 7, 9}}) {
        auto ns = gap_analysis(gens);
        i64 q = ns.reduced_generators.front();
        REQUIRE(static_cast<i64>(ns.apery.size()) == q);
        for (i64 r = 0; r < q; ++r) {
            i64 a = ns.apery[static_cast<std::size_t>(r)];
            CHECK(a % q == r);
            CHECK(ns.member(a));
            if (a >= q) CHECK(!ns.member(a - q));
        }
    }
}

TEST_CASE("gap structure invariants") {
    for (const auto& gens : std::vector<std::vector<i64>>{{3, 5}, {2, 3}, {7, 11}}) {
        auto ns = gap_analysis(gens);
        for (i64 g : ns.gaps) CHECK(g < ns.conductor);
        CHECK(!ns.member(ns.frobenius));
        CHECK(ns.member(ns.conductor));
    }
}
