#include "doctest.h"
#include "toricsg/semigroup.hpp"

using namespace toricsg;

namespace {
ToricSemigroup make(std::vector<Vec2> gens) { return ToricSemigroup::validate(std::move(gens)); }
}  // namespace

TEST_CASE("validate accepts and rejects the named sets") {
    CHECK_NOTHROW(make({{1, 0}, {0, 1}}));

    CHECK_THROWS_WITH_AS(make({{1, 0}, {-1, 0}, {0, 1}}),
                         "invalid generator set: NotPointed", ValidationError);
    CHECK_THROWS_WITH_AS(make({{2, 0}, {0, 2}}),
                         "invalid generator set: NotGenerating", ValidationError);
    CHECK_THROWS_AS(make({{0, 0}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(make({}), ValidationError);
}

TEST_CASE("extreme rays") {
    auto n2 = make({{1, 0}, {0, 1}});
    CHECK(n2.ray(1).r == Vec2{1, 0});
    CHECK(n2.ray(2).r == Vec2{0, 1});

    auto cone = make({{2, -1}, {1, 0}, {2, 1}});
    CHECK(cone.ray(1).r == Vec2{2, -1});
    CHECK(cone.ray(2).r == Vec2{2, 1});

    auto fan = make({{1, 0}, {1, 1}, {1, 3}});
    CHECK(fan.ray(1).r == Vec2{1, 0});
    CHECK(fan.ray(2).r == Vec2{1, 3});
    for (Vec2 g : fan.generators()) {
        CHECK(cross(fan.ray(1).r, g) >= 0);
        CHECK(cross(g, fan.ray(2).r) >= 0);
    }
}

TEST_CASE("face analysis") {
    auto axes = make({{2, 0}, {3, 0}, {0, 1}});
    const Face& f1 = axes.face(1);
    CHECK(f1.ray.r == Vec2{1, 0});
    CHECK(f1.coefficients == std::vector<i64>{2, 3});
    CHECK(f1.d == 1);
    CHECK(f1.asymptotic_generator == Vec2{1, 0});
    CHECK(f1.gaps == std::vector<i64>{1});
    CHECK(f1.conductor == 2);

    auto cone = make({{2, -1}, {1, 0}, {2, 1}});
    const Face& g2 = cone.face(2);
    CHECK(g2.coefficients == std::vector<i64>{1});
    CHECK(g2.d == 1);
    CHECK(g2.asymptotic_generator == Vec2{2, 1});
    CHECK(g2.gaps.empty());

    auto even = make({{2, 0}, {0, 1}, {1, 1}});
    const Face& h1 = even.face(1);
    CHECK(h1.coefficients == std::vector<i64>{2});
    CHECK(h1.d == 2);
    CHECK(h1.asymptotic_generator == Vec2{2, 0});
    CHECK(h1.gaps.empty());
    CHECK(h1.contains_coefficient(0));
    CHECK(!h1.contains_coefficient(1));
    CHECK(h1.contains_coefficient(2));
}

TEST_CASE("asymptotic generators are ordered positively") {
    auto n2 = make({{1, 0}, {0, 1}});
    CHECK(n2.asymptotic_generator(1) == Vec2{1, 0});
    CHECK(n2.asymptotic_generator(2) == Vec2{0, 1});
    CHECK(n2.det_a() == 1);

    auto cone = make({{2, -1}, {1, 0}, {2, 1}});
    CHECK(cone.asymptotic_generator(1) == Vec2{2, -1});
    CHECK(cone.asymptotic_generator(2) == Vec2{2, 1});
    CHECK(cone.det_a() == 4);

    auto even = make({{2, 0}, {0, 1}, {1, 1}});
    CHECK(even.asymptotic_generator(1) == Vec2{2, 0});
    CHECK(even.asymptotic_generator(2) == Vec2{0, 1});
    CHECK(even.det_a() == 2);
}

TEST_CASE("saturation membership") {
    auto cone = make({{2, -1}, {1, 0}, {2, 1}});
    CHECK(cone.saturation_member({0, 0}));
    CHECK(!cone.saturation_member({1, 1}));  // det((1,1),(2,1)) = -1

    auto even = make({{2, 0}, {0, 1}, {1, 1}});
    CHECK(even.saturation_member({1, 0}));  // in the cone but not in S
}

TEST_CASE("validation is order- and duplication-insensitive") {
    auto a = make({{2, -1}, {1, 0}, {2, 1}});
    auto b = make({{2, 1}, {2, -1}, {1, 0}, {2, -1}, {1, 0}});
    CHECK(a == b);
    CHECK(a.ray(1).r == b.ray(1).r);
    CHECK(a.face(2).coefficients == b.face(2).coefficients);
}

TEST_CASE("primitive") {
    CHECK(primitive({4, -6}) == Vec2{2, -3});
    CHECK(primitive({0, 5}) == Vec2{0, 1});
    CHECK(primitive({-3, 0}) == Vec2{-1, 0});
}
