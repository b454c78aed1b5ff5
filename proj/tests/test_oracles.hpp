#pragma once

// Independent brute-force oracles used only by tests. These deliberately do
// not share code with the implementation paths they check.

#include <set>
#include <vector>

#include "toricsg/lattice.hpp"

namespace toricsg::testing {

/// Naive subset-sum membership of the numerical semigroup <gens> on
/// [0, bound]: members[k] iff k is a nonnegative integer combination.
inline std::vector<bool> naive_numerical_members(const std::vector<i64>& gens, i64 bound) {
    std::vector<bool> members(static_cast<std::size_t>(bound) + 1, false);
    members[0] = true;
    for (i64 k = 1; k <= bound; ++k)
        for (i64 g : gens)
            if (g <= k && members[static_cast<std::size_t>(k - g)]) {
                members[static_cast<std::size_t>(k)] = true;
                break;
            }
    return members;
}

/// Naive closure: all sums of at most `depth` generators.
inline std::set<Vec2> naive_closure(const std::vector<Vec2>& gens, int depth) {
    std::set<Vec2> out{Vec2{0, 0}};
    for (int i = 0; i < depth; ++i) {
        std::set<Vec2> next = out;
        for (Vec2 p : out)
            for (Vec2 g : gens) next.insert(p + g);
        if (next == out) break;
        out = std::move(next);
    }
    return out;
}

}  // namespace toricsg::testing
