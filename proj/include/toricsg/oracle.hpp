#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricsg/semigroup.hpp"

namespace toricsg {

struct BoundTooLarge : std::runtime_error {
    BoundTooLarge() : std::runtime_error("enumeration window exceeds the cell cap") {}
};

struct NotMember : std::runtime_error {
    explicit NotMember(Vec2 p) : std::runtime_error("point " + p.str() + " is not in S") {}
};

struct NotSubset : std::runtime_error {
    NotSubset() : std::runtime_error("subsemigroup generators must lie in S") {}
};

struct RankDeficient : std::runtime_error {
    RankDeficient() : std::runtime_error("subsemigroup generators must span rank 2") {}
};

/// Exact membership table of the semigroup generated by `gens` inside the
/// cone of S, over the window {p in cone : f(p) <= N} for the functional
/// f(p) = det(a1, p) + det(p, a2), which is linear, integer and strictly
/// positive on the cone minus the origin. Built by DP in increasing f:
/// p is a member iff p = 0 or p - g is a member for some generator g.
class EnumerationTable {
  public:
    static EnumerationTable build(const ToricSemigroup& S, std::span<const Vec2> gens,
                                  i64 N, i64 cell_cap);

    i64 bound() const { return N_; }
    bool member(Vec2 p) const;
    /// All members in the window, sorted by (f, x, y).
    const std::vector<Vec2>& members() const { return members_; }

  private:
    bool in_box(Vec2 p) const {
        return p.x >= xmin_ && p.x <= xmax_ && p.y >= ymin_ && p.y <= ymax_;
    }
    std::size_t idx(Vec2 p) const {
        return static_cast<std::size_t>(p.y - ymin_) * static_cast<std::size_t>(xmax_ - xmin_ + 1) +
               static_cast<std::size_t>(p.x - xmin_);
    }
    i64 N_ = 0;
    i64 xmin_ = 0, xmax_ = -1, ymin_ = 0, ymax_ = -1;
    std::vector<std::uint8_t> grid_;
    std::vector<Vec2> members_;
};

struct ConeWitness {
    Vec2 z;
    Vec2 b1, b2;                     // on-face multiples of a1, a2
    std::vector<Vec2> parallelogram; // all lattice points of the cell spanned by b1, b2
};

struct QuotientWitness {
    Vec2 s1, s2;  // congruent pair sampled from S
    Vec2 f1, f2;  // subsemigroup elements with s1 + f1 == s2 + f2
};

enum class CheckStatus { Verified, BudgetExhausted, Skipped };

std::string to_string(CheckStatus s);

struct QuotientWitnessReport {
    IntMatrix2 lattice;       // columns: basis of the enveloping lattice of the subsemigroup
    i64 order = 0;            // |det lattice|
    AbelianGroup group;       // Z^2 / lattice
    std::vector<Vec2> representatives;  // least enumerated S-member per residue class
    std::vector<QuotientWitness> witnesses;
    CheckStatus status = CheckStatus::BudgetExhausted;
    std::string detail;
};

struct TranslateClass {
    Vec2 representative;  // least S-member of the class
    int face;             // 1 or 2
};

struct FlaggedClass {
    int face;
    Vec2 line_point;  // some point of the undecided class
    std::string reason;
};

struct ComplementDecomposition {
    std::vector<Vec2> finite_part;          // sorted, not covered by any translate
    std::vector<TranslateClass> translates; // classes certified disjoint from S+x
    std::vector<FlaggedClass> flagged;
};

struct BijectionReport {
    bool passed = false;
    i64 points_checked = 0;
    i64 representative_count = 0;
    std::string detail;
};

/// Brute-force verification layer over one validated semigroup. Owns a
/// growable membership table for S; all answers are exact within the
/// configured cell cap (BoundTooLarge otherwise).
class Oracle {
  public:
    static constexpr i64 kDefaultCellCap = 32'000'000;

    explicit Oracle(ToricSemigroup S, i64 cell_cap = kDefaultCellCap);

    const ToricSemigroup& semigroup() const { return S_; }
    i64 cell_cap() const { return cell_cap_; }

    /// f(p) = det(a1, p) + det(p, a2).
    i64 functional(Vec2 p) const;

    /// Exact membership p in S.
    bool member(Vec2 p);

    /// The table with bound >= N (grown on demand).
    const EnumerationTable& table(i64 N);

    /// A z in S with z + Y inside S, both re-verified by member.
    Vec2 find_translator(std::span<const Vec2> Y);

    /// Finite certificate for z + cone lying in S: checks b1, b2 in S and
    /// z + p in S for every lattice point p of the b1,b2-parallelogram.
    ConeWitness cone_witness();

    /// Order, structure and explicit witnesses for S / <sub_generators>.
    QuotientWitnessReport quotient_by_subsemigroup(std::vector<Vec2> sub_generators,
                                                   i64 N, i64 budget);

    /// Decomposition of S \ (S + x) into face translates and a finite set.
    ComplementDecomposition complement_decomposition(Vec2 x, i64 budget);

    /// Checks the bijection between S \ (S+x) and S/<x> on the window f <= N.
    BijectionReport bijection_check_L4(Vec2 x, i64 N);

    /// Pointwise check of ((u1+S) n (u2+S)) == ((v1+S) u (v2+S)) on f <= N.
    bool translate_identity_holds(Vec2 u1, Vec2 u2, Vec2 v1, Vec2 v2, i64 N);

    /// The failure-of-independence identity from the rank-4 example cone:
    /// ((2,1)+S) n ((2,0)+S) == ((4,1)+S) u ((4,0)+S) on the window f <= N.
    bool independence_failure_check(i64 N);

  private:
    bool member_far(Vec2 p);

    ToricSemigroup S_;
    i64 cell_cap_;
    std::optional<EnumerationTable> table_;
    std::optional<ConeWitness> witness_;  // cached
};

}  // namespace toricsg
