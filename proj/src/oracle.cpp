#include "toricsg/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricsg {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Verified: return "verified";
        case CheckStatus::BudgetExhausted: return "budget-exhausted";
        case CheckStatus::Skipped: return "skipped: bound";
    }
    return "?";
}

namespace {

i64 functional_of(const ToricSemigroup& S, Vec2 p) {
    return chk_add(cross(S.asymptotic_generator(1), p), cross(p, S.asymptotic_generator(2)));
}

struct Window {
    i64 xmin, xmax, ymin, ymax;
};

// Bounding box of the triangle {p in cone : f(p) <= N}, whose extreme
// vertices are 0 and (N / f(r_i)) * r_i.
Window window_box(const ToricSemigroup& S, i64 N, i64 cell_cap) {
    Vec2 r1 = S.ray(1).r, r2 = S.ray(2).r;
    i64 f1 = functional_of(S, r1), f2 = functional_of(S, r2);
    // f is strictly positive on the cone minus 0, so f1, f2 >= 1
    Window w{};
    w.xmin = std::min<i64>({0, floor_div(chk_mul(N, r1.x), f1), floor_div(chk_mul(N, r2.x), f2)});
    w.xmax = std::max<i64>({0, ceil_div(chk_mul(N, r1.x), f1), ceil_div(chk_mul(N, r2.x), f2)});
    w.ymin = std::min<i64>({0, floor_div(chk_mul(N, r1.y), f1), floor_div(chk_mul(N, r2.y), f2)});
    w.ymax = std::max<i64>({0, ceil_div(chk_mul(N, r1.y), f1), ceil_div(chk_mul(N, r2.y), f2)});
    i64 cells = chk_mul(w.xmax - w.xmin + 1, w.ymax - w.ymin + 1);
    if (cells > cell_cap) throw BoundTooLarge{};
    return w;
}

// All cone points with f <= N, sorted by (f, x, y).
std::vector<Vec2> cone_window_points(const ToricSemigroup& S, i64 N, i64 cell_cap) {
    Window w = window_box(S, N, cell_cap);
    std::vector<std::pair<i64, Vec2>> pts;
    for (i64 y = w.ymin; y <= w.ymax; ++y)
        for (i64 x = w.xmin; x <= w.xmax; ++x) {
            Vec2 p{x, y};
            if (!S.saturation_member(p)) continue;
            i64 f = functional_of(S, p);
            if (f <= N) pts.push_back({f, p});
        }
    std::sort(pts.begin(), pts.end());
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (auto& [f, p] : pts) out.push_back(p);
    return out;
}

}  // namespace

EnumerationTable EnumerationTable::build(const ToricSemigroup& S, std::span<const Vec2> gens,
                                         i64 N, i64 cell_cap) {
    EnumerationTable t;
    t.N_ = N;
    Window w = window_box(S, N, cell_cap);
    t.xmin_ = w.xmin; t.xmax_ = w.xmax; t.ymin_ = w.ymin; t.ymax_ = w.ymax;
    t.grid_.assign(static_cast<std::size_t>(w.xmax - w.xmin + 1) *
                       static_cast<std::size_t>(w.ymax - w.ymin + 1),
                   0);
    for (Vec2 p : cone_window_points(S, N, cell_cap)) {
        bool in = p.is_zero();
        for (std::size_t i = 0; !in && i < gens.size(); ++i) {
            Vec2 q = p - gens[i];
            in = t.in_box(q) && t.grid_[t.idx(q)] != 0;
        }
        if (in) {
            t.grid_[t.idx(p)] = 1;
            t.members_.push_back(p);
        }
    }
    return t;
}

bool EnumerationTable::member(Vec2 p) const {
    return in_box(p) && grid_[idx(p)] != 0;
}

Oracle::Oracle(ToricSemigroup S, i64 cell_cap) : S_(std::move(S)), cell_cap_(cell_cap) {}

i64 Oracle::functional(Vec2 p) const { return functional_of(S_, p); }

const EnumerationTable& Oracle::table(i64 N) {
    if (!table_ || table_->bound() < N) {
        i64 target = std::max<i64>({N, table_ ? 2 * table_->bound() : 0, 16});
        table_ = EnumerationTable::build(S_, S_.generators(), target, cell_cap_);
    }
    return *table_;
}

bool Oracle::member(Vec2 p) {
    if (!S_.saturation_member(p)) return false;
    try {
        return table(functional(p)).member(p);
    } catch (const BoundTooLarge&) {
        return member_far(p);
    }
}

// Exact membership of a single far point. Every representation of p has all
// partial sums inside R = cone n (p - cone), so a DP over R alone decides
// membership; R's box is far smaller than the f-window triangle that the
// shared table would need.
bool Oracle::member_far(Vec2 p) {
    Vec2 r1 = S_.ray(1).r, r2 = S_.ray(2).r;
    i64 D = cross(r1, r2);
    i64 u = cross(r1, p), v = cross(p, r2);  // both >= 0: p is in the cone
    // R is the parallelogram with vertices 0, (v/D)*r1, p, (u/D)*r2.
    i64 xmin = std::min<i64>({0, p.x, floor_div(chk_mul(u, r2.x), D), floor_div(chk_mul(v, r1.x), D)});
    i64 xmax = std::max<i64>({0, p.x, ceil_div(chk_mul(u, r2.x), D), ceil_div(chk_mul(v, r1.x), D)});
    i64 ymin = std::min<i64>({0, p.y, floor_div(chk_mul(u, r2.y), D), floor_div(chk_mul(v, r1.y), D)});
    i64 ymax = std::max<i64>({0, p.y, ceil_div(chk_mul(u, r2.y), D), ceil_div(chk_mul(v, r1.y), D)});
    i64 w = xmax - xmin + 1, h = ymax - ymin + 1;
    if (chk_mul(w, h) > cell_cap_) throw BoundTooLarge{};

    std::vector<std::pair<i64, Vec2>> region;
    for (i64 y = ymin; y <= ymax; ++y)
        for (i64 x = xmin; x <= xmax; ++x) {
            Vec2 q{x, y};
            i64 a = cross(r1, q), b = cross(q, r2);
            if (a < 0 || a > u || b < 0 || b > v) continue;
            region.push_back({functional(q), q});
        }
    std::sort(region.begin(), region.end());

    std::vector<std::uint8_t> grid(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
    auto idx = [&](Vec2 q) {
        return static_cast<std::size_t>(q.y - ymin) * static_cast<std::size_t>(w) +
               static_cast<std::size_t>(q.x - xmin);
    };
    auto in_box = [&](Vec2 q) {
        return q.x >= xmin && q.x <= xmax && q.y >= ymin && q.y <= ymax;
    };
    for (auto& [f, q] : region) {
        bool in = q.is_zero();
        for (std::size_t i = 0; !in && i < S_.generators().size(); ++i) {
            Vec2 t = q - S_.generators()[i];
            in = in_box(t) && grid[idx(t)] != 0;
        }
        if (in) grid[idx(q)] = 1;
    }
    return grid[idx(p)] != 0;
}

Vec2 Oracle::find_translator(std::span<const Vec2> Y) {
    // Per the representation argument: write each y over the generators and
    // add up the negated negative parts.
    std::set<Vec2> ys(Y.begin(), Y.end());
    const auto& gens = S_.generators();
    Vec2 z{0, 0};
    for (Vec2 y : ys) {
        auto c = solve_diophantine(gens, y);
        if (!c) throw std::logic_error("validated semigroup failed to represent a lattice point");
        for (std::size_t j = 0; j < gens.size(); ++j)
            if ((*c)[j] < 0) z = z + chk_neg((*c)[j]) * gens[j];
    }
    if (!member(z)) throw std::logic_error("translator left S; construction is broken");
    for (Vec2 y : ys)
        if (!member(z + y)) throw std::logic_error("translator failed re-verification");
    return z;
}

ConeWitness Oracle::cone_witness() {
    if (witness_) return *witness_;
    ConeWitness cw;
    // Smallest on-face multiple of a_i at or beyond the conductor.
    i64 k1 = std::max<i64>(S_.face(1).ns.conductor, 1);
    i64 k2 = std::max<i64>(S_.face(2).ns.conductor, 1);
    cw.b1 = k1 * S_.asymptotic_generator(1);
    cw.b2 = k2 * S_.asymptotic_generator(2);
    if (!member(cw.b1) || !member(cw.b2))
        throw std::logic_error("face multiple beyond the conductor is not in S");

    // Lattice points of the closed parallelogram spanned by b1, b2.
    i64 D = cross(cw.b1, cw.b2);
    i64 xmin = std::min<i64>({0, cw.b1.x, cw.b2.x, cw.b1.x + cw.b2.x});
    i64 xmax = std::max<i64>({0, cw.b1.x, cw.b2.x, cw.b1.x + cw.b2.x});
    i64 ymin = std::min<i64>({0, cw.b1.y, cw.b2.y, cw.b1.y + cw.b2.y});
    i64 ymax = std::max<i64>({0, cw.b1.y, cw.b2.y, cw.b1.y + cw.b2.y});
    for (i64 y = ymin; y <= ymax; ++y)
        for (i64 x = xmin; x <= xmax; ++x) {
            Vec2 p{x, y};
            i64 u = cross(cw.b1, p), v = cross(p, cw.b2);
            if (u >= 0 && u <= D && v >= 0 && v <= D) cw.parallelogram.push_back(p);
        }

    // Smallest-f member z of S with z + P inside S. Existence is guaranteed,
    // so grow the candidate window until one is found.
    i64 fP = functional(cw.b1 + cw.b2);
    for (i64 Nc = 2 * fP;; Nc = 2 * Nc) {
        const auto members = table(Nc).members();  // copy: member() below regrows the table
        for (Vec2 z : members) {
            bool ok = true;
            for (Vec2 p : cw.parallelogram)
                if (!member(z + p)) { ok = false; break; }
            if (ok) {
                cw.z = z;
                witness_ = cw;
                return cw;
            }
        }
    }
}

QuotientWitnessReport Oracle::quotient_by_subsemigroup(std::vector<Vec2> sub, i64 N, i64 budget) {
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (sub.empty()) throw RankDeficient{};
    for (Vec2 s : sub)
        if (!member(s)) throw NotSubset{};

    QuotientWitnessReport rep;
    rep.lattice = lattice_basis_of_columns(sub);
    Vec2 c1 = rep.lattice.column(0), c2 = rep.lattice.column(1);
    if (c1.x == 0 || c2.y == 0) throw RankDeficient{};
    rep.order = chk_mul(c1.x, c2.y);
    rep.group = cokernel_invariants(rep.lattice);

    auto canon = [&](Vec2 p) {
        p = p - floor_div(p.x, c1.x) * c1;
        p = p - floor_div(p.y, c2.y) * c2;
        return p;
    };

    // Surjectivity: every residue class mod the lattice must be hit by an
    // enumerated S-point (the image of S is a subgroup of the finite group).
    std::vector<Vec2> members;
    try {
        members = table(N).members();
    } catch (const BoundTooLarge&) {
        rep.status = CheckStatus::Skipped;
        rep.detail = "enumeration window exceeds the cell cap";
        return rep;
    }
    std::map<Vec2, std::vector<Vec2>> classes;  // residue -> members by increasing f
    for (Vec2 m : members) classes[canon(m)].push_back(m);
    for (auto& [r, ms] : classes) rep.representatives.push_back(ms.front());
    std::sort(rep.representatives.begin(), rep.representatives.end());
    if (static_cast<i64>(classes.size()) != rep.order) {
        rep.status = CheckStatus::BudgetExhausted;
        rep.detail = "only " + std::to_string(classes.size()) + " of " +
                     std::to_string(rep.order) + " residue classes hit at bound " +
                     std::to_string(N);
        return rep;
    }

    // Injectivity witnesses: for sampled congruent pairs (s1, s2) find
    // f1 in <sub> with f1 + (s1 - s2) also in <sub>; then s1 + f1 = s2 + f2.
    EnumerationTable subtbl = EnumerationTable::build(S_, sub, N, cell_cap_);
    bool all_found = true;
    for (auto& [r, ms] : classes) {
        for (std::size_t k = 1; k < std::min<std::size_t>(ms.size(), 3); ++k) {
            Vec2 s1 = ms[0], s2 = ms[k];
            Vec2 delta = s1 - s2;
            bool found = false;
            i64 tried = 0;
            for (Vec2 f1 : subtbl.members()) {
                if (++tried > budget) break;
                Vec2 f2 = f1 + delta;
                if (!S_.saturation_member(f2)) continue;
                if (functional(f2) > subtbl.bound()) continue;
                if (subtbl.member(f2)) {
                    rep.witnesses.push_back({s1, s2, f1, f2});
                    found = true;
                    break;
                }
            }
            if (!found) {
                all_found = false;
                rep.detail = "no witness for pair " + s1.str() + " ~ " + s2.str() +
                             " within budget";
            }
        }
    }
    rep.status = all_found ? CheckStatus::Verified : CheckStatus::BudgetExhausted;
    return rep;
}

ComplementDecomposition Oracle::complement_decomposition(Vec2 x, i64 budget) {
    if (!member(x)) throw NotMember{x};
    ComplementDecomposition out;
    Vec2 t = cone_witness().z + x;  // t + cone is inside S + x
    std::set<Vec2> finite;

    for (int j : {1, 2}) {
        Vec2 r = S_.ray(j).r;
        Vec2 a = S_.asymptotic_generator(j);
        i64 d = S_.face(j).d;
        i64 cond = S_.face(j).ns.conductor;  // in units of a
        Vec2 other = S_.ray(j == 1 ? 2 : 1).r;
        i64 denom = cross(S_.ray(1).r, S_.ray(2).r);  // > 0

        auto level = [&](Vec2 p) { return j == 1 ? cross(r, p) : cross(p, r); };
        i64 levels = level(t);
        i64 xlevel = level(x);

        // Base point of the line {level = c}: gcd(r.x, r.y) = 1 gives a
        // Bezout solution; the line is base + Z*r.
        auto [g, u, v] = ext_gcd(r.x, r.y);
        auto line_base = [&](i64 c) {
            return j == 1 ? Vec2{chk_mul(chk_neg(v), c), chk_mul(u, c)}
                          : Vec2{chk_mul(v, c), chk_mul(chk_neg(u), c)};
        };

        for (i64 c = 0; c < levels; ++c) {
            Vec2 p0 = line_base(c);
            // entry into the cone along +r, from the other ray's constraint
            i64 side = j == 1 ? cross(p0, other) : cross(other, p0);
            i64 kmin = ceil_div(chk_neg(side), denom);
            for (i64 rho = 0; rho < d; ++rho) {
                i64 k0 = kmin + pos_mod(rho - kmin, d);
                auto at = [&](i64 m) { return p0 + (k0 + m * d) * r; };

                // least S-member of the class (exact: smaller indices are
                // outside the cone or checked nonmembers)
                i64 m0 = -1;
                for (i64 m = 0; m <= budget; ++m)
                    if (member(at(m))) { m0 = m; break; }
                if (m0 < 0) {
                    out.flagged.push_back({j, at(0), "no S member found within budget"});
                    continue;
                }
                Vec2 y0 = at(m0);

                if (c - xlevel < 0) {
                    // the shifted class y - x lies outside the cone, so the
                    // class never meets S + x: a full face translate
                    out.translates.push_back({y0, j});
                    continue;
                }
                // least S+x member; it cannot sit below y0 since S+x is in S
                i64 mx = -1;
                for (i64 m = m0; m <= m0 + budget; ++m)
                    if (member(at(m) - x)) { mx = m; break; }
                if (mx < 0) {
                    out.flagged.push_back({j, y0, "no S+x member found within budget"});
                    continue;
                }
                // beyond mx + cond the whole tail is in S + x (add F_j)
                for (i64 m = m0; m < mx + cond; ++m) {
                    Vec2 p = at(m);
                    if (member(p) && !member(p - x)) finite.insert(p);
                }
            }
        }
    }

    // Points of certified translates do not belong in the finite part.
    for (Vec2 p : finite) {
        bool covered = false;
        for (const auto& tc : out.translates) {
            int j = tc.face;
            Vec2 diff = p - tc.representative;
            if (cross(S_.ray(j).r, diff) != 0) continue;
            Vec2 r = S_.ray(j).r;
            i64 k = r.x != 0 ? diff.x / r.x : diff.y / r.y;
            if (pos_mod(k, S_.face(j).d) == 0) { covered = true; break; }
        }
        if (!covered) out.finite_part.push_back(p);
    }
    return out;
}

BijectionReport Oracle::bijection_check_L4(Vec2 x, i64 N) {
    if (x.is_zero()) throw std::invalid_argument("bijection check needs nonzero x");
    if (!member(x)) throw NotMember{x};
    BijectionReport rep;
    rep.passed = true;

    std::set<Vec2> reps;
    std::vector<Vec2> members;  // copy: member() below may regrow the table
    for (Vec2 s : table(N).members())
        if (functional(s) <= N) members.push_back(s);  // table may round N up
    for (Vec2 s : members) {
        // subtract x maximally: minimal n with s in S + n*x
        Vec2 z = s;
        while (member(z - x)) z = z - x;
        // z in S by construction and z - x not in S, so z in S \ (S+x)
        reps.insert(z);
        ++rep.points_checked;
    }
    rep.representative_count = static_cast<i64>(reps.size());

    // Injectivity: distinct representatives must be inequivalent mod <x>.
    // Representatives differing by a multiple of x share the line key
    // cross(x, .), so only same-key pairs need the divisibility test.
    std::map<i64, std::vector<Vec2>> lines;
    for (Vec2 z : reps) lines[cross(x, z)].push_back(z);
    for (auto& [key, zs] : lines)
        for (std::size_t i = 0; i < zs.size(); ++i)
            for (std::size_t k = i + 1; k < zs.size(); ++k) {
                Vec2 diff = zs[k] - zs[i];
                i64 m = x.x != 0 ? diff.x / x.x : diff.y / x.y;
                if (m * x == diff) {
                    rep.passed = false;
                    rep.detail = "representatives " + zs[i].str() + " and " + zs[k].str() +
                                 " are congruent mod <x>";
                    return rep;
                }
            }
    return rep;
}

bool Oracle::translate_identity_holds(Vec2 u1, Vec2 u2, Vec2 v1, Vec2 v2, i64 N) {
    // Both sides are contained in the cone, so the pointwise check over the
    // cone window is the full check at this bound.
    for (Vec2 p : cone_window_points(S_, N, cell_cap_)) {
        bool lhs = member(p - u1) && member(p - u2);
        bool rhs = member(p - v1) || member(p - v2);
        if (lhs != rhs) return false;
    }
    return true;
}

bool Oracle::independence_failure_check(i64 N) {
    return translate_identity_holds({2, 1}, {2, 0}, {4, 1}, {4, 0}, N);
}

}  // namespace toricsg
