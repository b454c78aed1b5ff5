#pragma once

#include <stdexcept>
#include <vector>

#include "toricsg/lattice.hpp"

namespace toricsg {

struct EmptyInput : std::runtime_error {
    EmptyInput() : std::runtime_error("numerical semigroup needs at least one generator") {}
};

struct GcdNotOne : std::runtime_error {
    GcdNotOne() : std::runtime_error("reduced generator set must have gcd 1") {}
};

/// A cofinite subsemigroup of N given by generators, after dividing out the
/// gcd d of the raw generators. Gap data (gaps, frobenius, conductor) lives
/// in reduced units, i.e. describes <raw/d> inside N.
struct NumericalSemigroup {
    std::vector<i64> raw_generators;      // sorted, unique, positive
    i64 d = 1;                            // gcd of raw generators
    std::vector<i64> reduced_generators;  // raw/d, gcd 1
    std::vector<i64> apery;               // apery[r]: least member == r (mod q), q smallest reduced gen
    std::vector<i64> gaps;                // sorted; finite by cofiniteness
    i64 frobenius = -1;                   // largest gap, -1 when gap-free
    i64 conductor = 0;                    // frobenius + 1

    /// Membership of k in the reduced semigroup; O(1) for k >= conductor.
    bool member(i64 k) const;
};

/// (gcd, generators/gcd) of a nonempty set of positive integers.
std::pair<i64, std::vector<i64>> normalize_generators(std::vector<i64> ks);

/// Full gap analysis of a gcd-1 generator set via Dijkstra relaxation over
/// residues modulo the smallest generator (Apery set construction).
NumericalSemigroup gap_analysis(std::vector<i64> reduced);

/// normalize + gap_analysis in one step.
NumericalSemigroup analyze_numerical_semigroup(std::vector<i64> ks);

}  // namespace toricsg
