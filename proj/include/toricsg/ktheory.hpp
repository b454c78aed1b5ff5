#pragma once

#include "toricsg/oracle.hpp"
#include "toricsg/semigroup.hpp"

namespace toricsg {

struct NotOrdered : std::runtime_error {
    NotOrdered() : std::runtime_error("asymptotic generators must satisfy det(a1, a2) > 0") {}
};

struct OnFace : std::runtime_error {
    explicit OnFace(Vec2 s, int j)
        : std::runtime_error("index map undefined: " + s.str() + " lies on face " +
                             std::to_string(j)) {}
};

/// K-theory of the left regular C*-algebra, computed from the structure
/// matrices of the asymptotic generators: K0 = Z + Z^2/MZ^2, K1 = 0.
struct KTheoryReport {
    Vec2 a1, a2;
    IntMatrix2 M;         // adjugate of Mperp
    IntMatrix2 Mperp;     // columns a1, a2
    i64 detM = 0;         // det(a1, a2) > 0
    std::vector<i64> snf_factors;  // invariant factors of M, (d1, d2)
    AbelianGroup sf_quotient;      // S/F = Z^2 / M Z^2, torsion only
    AbelianGroup K0;               // Z + sf_quotient
    AbelianGroup K1;               // trivial
};

/// M = [[y2, -x2], [-y1, x1]] and Mperp = [[x1, x2], [y1, y2]];
/// M * Mperp = det(a1, a2) * identity. Throws NotOrdered when det <= 0.
std::pair<IntMatrix2, IntMatrix2> structure_matrices(Vec2 a1, Vec2 a2);

KTheoryReport k_theory(const ToricSemigroup& S);

/// Boundary index of lambda(s) over face j: (-1)^(j+1) * det(a_j, s),
/// whose absolute value counts the F_j-translates in S \ (S+s).
/// Requires s in S (oracle-checked) and s off face j.
i64 index_map(Oracle& oracle, Vec2 s, int j);

}  // namespace toricsg
