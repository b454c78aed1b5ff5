#include "toricsg/ktheory.hpp"
#include <tuple>

namespace toricsg {

std::pair<IntMatrix2, IntMatrix2> structure_matrices(Vec2 a1, Vec2 a2) {
    if (cross(a1, a2) <= 0) throw NotOrdered{};
    IntMatrix2 Mperp = IntMatrix2::from_columns(a1, a2);
    IntMatrix2 M = Mperp.adjugate();  // [[y2, -x2], [-y1, x1]]
    return {M, Mperp};
}

KTheoryReport k_theory(const ToricSemigroup& S) {
    KTheoryReport rep;
    rep.a1 = S.asymptotic_generator(1);
    rep.a2 = S.asymptotic_generator(2);
    std::tie(rep.M, rep.Mperp) = structure_matrices(rep.a1, rep.a2);
    rep.detM = rep.M.det();

    SmithDecomposition snf = smith_normal_form(rep.M);
    rep.snf_factors = {snf.d1, snf.d2};
    rep.sf_quotient = cokernel_invariants(rep.M);
    rep.K0.free_rank = 1 + rep.sf_quotient.free_rank;  // rank term is always 1: detM > 0
    rep.K0.torsion = rep.sf_quotient.torsion;
    rep.K1 = AbelianGroup{};
    return rep;
}

i64 index_map(Oracle& oracle, Vec2 s, int j) {
    if (!oracle.member(s)) throw NotMember{s};
    const ToricSemigroup& S = oracle.semigroup();
    Vec2 aj = S.asymptotic_generator(j);
    i64 det = cross(aj, s);
    if (det == 0) throw OnFace{s, j};  // s on the line Z*a_j, i.e. in F_j
    return j == 1 ? det : chk_neg(det);
}

}  // namespace toricsg
