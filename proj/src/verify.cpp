#include "toricsg/verify.hpp"

#include <algorithm>
#include <cstdlib>

namespace toricsg {

namespace {

json pass() { return json{{"status", "pass"}}; }
json fail(const std::string& why) { return json{{"status", "fail"}, {"detail", why}}; }
json skipped() { return json{{"status", "skipped: bound"}}; }

// All input generators lying on the extreme rays: generators of F1 + F2.
std::vector<Vec2> face_generators(const ToricSemigroup& S, int j) {
    std::vector<Vec2> out;
    for (i64 k : S.face(j).coefficients) out.push_back(k * S.ray(j).r);
    return out;
}

// The quotient check needs enough enumerated points to hit every residue
// class; the right window is instance-dependent, so double the bound until
// the check concludes or the cell cap ends the search (the image of S in the
// finite quotient group is all of it, so growth terminates in principle).
QuotientWitnessReport quotient_growing(Oracle& oracle, const std::vector<Vec2>& sub,
                                       i64 bound, i64 budget) {
    QuotientWitnessReport q;
    for (i64 N = bound;; N *= 2) {
        q = oracle.quotient_by_subsemigroup(sub, N, budget);
        if (q.status != CheckStatus::BudgetExhausted) return q;
        try {
            (void)oracle.table(2 * N);  // probe: give up once the cap is near
        } catch (const BoundTooLarge&) {
            if (static_cast<i64>(q.representatives.size()) < q.order) {
                // missing residue classes are a window limitation, not a
                // search-budget one
                q.status = CheckStatus::Skipped;
                q.detail += "; cell cap reached";
            }
            return q;
        }
    }
}

}  // namespace

VerifyOutcome verify_instance(const ToricSemigroup& S, const VerifyOptions& opt) {
    VerifyOutcome out;
    Oracle oracle(S, opt.cell_cap);
    KTheoryReport kt = k_theory(S);

    auto record = [&](const std::string& name, const json& chk) {
        out.checks[name] = chk;
        const std::string& st = chk["status"].get_ref<const std::string&>();
        if (st == "fail") out.mismatch = true;
        if (st == "budget-exhausted") out.budget_exhausted = true;
    };

    // Structure-matrix identities and the K1 = 0 mechanism.
    {
        json chk = pass();
        IntMatrix2 prod = kt.M * kt.Mperp;
        IntMatrix2 expect{kt.detM, 0, 0, kt.detM};
        if (prod != expect) chk = fail("M * Mperp != detM * identity");
        else if (kt.sf_quotient.order() != kt.detM) chk = fail("|cokernel(M)| != detM");
        else if (cokernel_invariants(kt.M) != cokernel_invariants(kt.Mperp))
            chk = fail("cokernel(M) != cokernel(Mperp)");
        else if (kt.detM <= 0) chk = fail("detM not positive: kernel of M is nonzero");
        record("structure_matrices", chk);
    }

    // S/F against the cokernel of M, with explicit quotient witnesses.
    {
        std::vector<Vec2> sub = face_generators(S, 1);
        for (Vec2 g : face_generators(S, 2)) sub.push_back(g);
        json chk;
        try {
            QuotientWitnessReport q = quotient_growing(oracle, sub, opt.bound, opt.budget);
            chk["quotient"] = q;
            if (q.status == CheckStatus::Skipped) chk["status"] = "skipped: bound";
            else if (q.status == CheckStatus::BudgetExhausted) chk["status"] = "budget-exhausted";
            else if (q.order != kt.detM)
                chk = fail("oracle |S/F| = " + std::to_string(q.order) + " but detM = " +
                           std::to_string(kt.detM));
            else if (q.group != kt.sf_quotient)
                chk = fail("oracle S/F structure " + q.group.str() + " != cokernel " +
                           kt.sf_quotient.str());
            else chk["status"] = "pass";
        } catch (const BoundTooLarge&) {
            chk = skipped();
        }
        record("sf_quotient", chk);
    }

    // Certificates: cone witness and a translator for a fixed sample set.
    try {
        ConeWitness cw = oracle.cone_witness();
        json chk = pass();
        chk["witness"] = cw;
        record("cone_witness", chk);
    } catch (const BoundTooLarge&) {
        record("cone_witness", skipped());
    }
    try {
        std::vector<Vec2> Y{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        Vec2 z = oracle.find_translator(Y);
        json chk = pass();
        chk["z"] = z;
        record("find_translator", chk);
    } catch (const BoundTooLarge&) {
        record("find_translator", skipped());
    }

    // Face exactness (F = S n Za) and the ordering/positivity invariants of
    // the enumerated members.
    try {
        const EnumerationTable& tbl = oracle.table(opt.bound);
        json chk = pass();
        for (int j : {1, 2}) {
            Vec2 r = S.ray(j).r;
            i64 fr = oracle.functional(r);
            for (i64 k = 0; k * fr <= opt.bound; ++k) {
                bool in_S = tbl.member(k * r);
                bool in_face = S.face(j).contains_coefficient(k);
                if (in_S != in_face) {
                    chk = fail("face " + std::to_string(j) + " disagrees with S at k=" +
                               std::to_string(k));
                    break;
                }
            }
        }
        for (Vec2 s : tbl.members()) {
            i64 d1 = cross(kt.a1, s), d2 = cross(s, kt.a2);
            if (d1 < 0 || d2 < 0 ||
                (d1 == 0 && !s.is_zero() && cross(S.ray(1).r, s) != 0) ||
                (d2 == 0 && !s.is_zero() && cross(s, S.ray(2).r) != 0)) {
                chk = fail("member " + s.str() + " violates the determinant sign invariant");
                break;
            }
        }
        record("face_exactness", chk);
    } catch (const BoundTooLarge&) {
        record("face_exactness", skipped());
    }

    // Lemma-L4 bijection for one sampled x.
    try {
        Vec2 x = S.generators().front();
        BijectionReport b = oracle.bijection_check_L4(x, std::min<i64>(opt.bound, 100));
        json chk = b.passed ? pass() : fail(b.detail);
        chk["bijection"] = b;
        chk["x"] = x;
        record("bijection_L4", chk);
    } catch (const BoundTooLarge&) {
        record("bijection_L4", skipped());
    }

    // Index map vs certified quotient order vs translate count.
    try {
        const EnumerationTable& tbl = oracle.table(opt.bound);
        std::vector<Vec2> candidates;
        for (Vec2 s : tbl.members())
            if (cross(kt.a1, s) != 0 && cross(s, kt.a2) != 0) candidates.push_back(s);
        json chk = pass();
        json samples = json::array();
        std::size_t n = std::min<std::size_t>(candidates.size(),
                                              static_cast<std::size_t>(opt.index_samples));
        for (std::size_t i = 0; i < n && chk["status"] == "pass"; ++i) {
            Vec2 s = candidates[i * candidates.size() / n];
            json sample{{"s", s}};
            for (int j : {1, 2}) {
                i64 idx = index_map(oracle, s, j);
                sample["index_" + std::to_string(j)] = idx;
                std::vector<Vec2> sub = face_generators(S, j);
                sub.push_back(s);
                QuotientWitnessReport q = quotient_growing(oracle, sub, opt.bound, opt.budget);
                if (q.status == CheckStatus::Verified && q.order != std::abs(idx)) {
                    chk = fail("index " + std::to_string(idx) + " != |S/(F_j+<s>)| = " +
                               std::to_string(q.order) + " at s=" + s.str());
                    break;
                }
                if (q.status != CheckStatus::Verified) chk["status"] = "budget-exhausted";
            }
            // line probes walk far from the origin, so keep their budget
            // modest regardless of the (cheap) witness-search budget
            ComplementDecomposition cd =
                oracle.complement_decomposition(s, std::min<i64>(opt.budget, 64));
            if (cd.flagged.empty()) {
                i64 n1 = 0, n2 = 0;
                for (const auto& t : cd.translates) (t.face == 1 ? n1 : n2) += 1;
                i64 e1 = std::abs(index_map(oracle, s, 1));
                i64 e2 = std::abs(index_map(oracle, s, 2));
                if (n1 != e1 || n2 != e2)
                    chk = fail("translate counts (" + std::to_string(n1) + "," +
                               std::to_string(n2) + ") != |index| (" + std::to_string(e1) +
                               "," + std::to_string(e2) + ") at s=" + s.str());
            }
            sample["translates_flagged"] = !cd.flagged.empty();
            samples.push_back(sample);
        }
        chk["samples"] = samples;
        record("index_consistency", chk);
    } catch (const BoundTooLarge&) {
        record("index_consistency", skipped());
    }

    return out;
}

}  // namespace toricsg
