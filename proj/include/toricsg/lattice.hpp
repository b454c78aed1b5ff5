#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricsg {

using i64 = std::int64_t;

/// Thrown when an exact integer operation would wrap around.
struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

inline i64 chk_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

inline i64 chk_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

inline i64 chk_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
    return r;
}

inline i64 chk_neg(i64 a) { return chk_sub(0, a); }

/// Floor division (rounds toward -inf); b != 0.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

/// Mathematical mod: result in [0, |b|).
inline i64 pos_mod(i64 a, i64 b) {
    i64 m = b < 0 ? -b : b;
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

/// A point of the integer lattice Z^2.
struct Vec2 {
    i64 x = 0;
    i64 y = 0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {chk_add(a.x, b.x), chk_add(a.y, b.y)}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {chk_sub(a.x, b.x), chk_sub(a.y, b.y)}; }
    friend Vec2 operator-(Vec2 a) { return {chk_neg(a.x), chk_neg(a.y)}; }
    friend Vec2 operator*(i64 k, Vec2 a) { return {chk_mul(k, a.x), chk_mul(k, a.y)}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
    friend auto operator<=>(Vec2 a, Vec2 b) = default;

    bool is_zero() const { return x == 0 && y == 0; }
    std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

/// det(a b) for column vectors a, b.
inline i64 cross(Vec2 a, Vec2 b) { return chk_sub(chk_mul(a.x, b.y), chk_mul(a.y, b.x)); }

inline i64 dot(Vec2 a, Vec2 b) { return chk_add(chk_mul(a.x, b.x), chk_mul(a.y, b.y)); }

/// Row-major integral 2x2 matrix.
struct IntMatrix2 {
    i64 a = 0, b = 0, c = 0, d = 0;

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }
    static IntMatrix2 from_columns(Vec2 c1, Vec2 c2) { return {c1.x, c2.x, c1.y, c2.y}; }

    i64 det() const { return chk_sub(chk_mul(a, d), chk_mul(b, c)); }
    IntMatrix2 adjugate() const { return {d, chk_neg(b), chk_neg(c), a}; }

    Vec2 apply(Vec2 v) const {
        return {chk_add(chk_mul(a, v.x), chk_mul(b, v.y)),
                chk_add(chk_mul(c, v.x), chk_mul(d, v.y))};
    }

    friend IntMatrix2 operator*(const IntMatrix2& p, const IntMatrix2& q) {
        return {chk_add(chk_mul(p.a, q.a), chk_mul(p.b, q.c)),
                chk_add(chk_mul(p.a, q.b), chk_mul(p.b, q.d)),
                chk_add(chk_mul(p.c, q.a), chk_mul(p.d, q.c)),
                chk_add(chk_mul(p.c, q.b), chk_mul(p.d, q.d))};
    }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

    Vec2 column(int j) const { return j == 0 ? Vec2{a, c} : Vec2{b, d}; }
    Vec2 row(int i) const { return i == 0 ? Vec2{a, b} : Vec2{c, d}; }
};

struct ExtGcd {
    i64 g;  // >= 0
    i64 u;
    i64 v;  // u*a + v*b == g
};

/// Extended Euclid; gcd(0,0) = 0.
ExtGcd ext_gcd(i64 a, i64 b);

inline i64 gcd_nonneg(i64 a, i64 b) { return ext_gcd(a, b).g; }

/// U*A*V = diag(d1,d2) with U, V unimodular, 0 <= d1, d1 | d2.
struct SmithDecomposition {
    IntMatrix2 U;
    IntMatrix2 V;
    i64 d1 = 0;
    i64 d2 = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix2& A);

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank  +  Z/t1 + Z/t2 + ...  with 2 <= t1 | t2 | ...
struct AbelianGroup {
    int free_rank = 0;
    std::vector<i64> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Order when finite; 0 encodes infinite.
    i64 order() const;
    std::string str() const;
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Canonical form of Z^2 / A Z^2.
AbelianGroup cokernel_invariants(const IntMatrix2& A);

/// Cokernel of the lattice spanned by an arbitrary list of columns
/// (Z^2 / <cols>); used for generator-set validation.
AbelianGroup cokernel_of_columns(std::span<const Vec2> cols);

/// Triangular column basis of the lattice spanned by `cols`: returns a
/// matrix whose columns (c1, c2) span the same lattice, c1 = (g, *),
/// c2 = (0, h). Zero columns signal rank deficiency.
IntMatrix2 lattice_basis_of_columns(std::span<const Vec2> cols);

/// One integer solution c of G*c = y, with G given by columns;
/// nullopt when y is outside the column lattice.
std::optional<std::vector<i64>> solve_diophantine(std::span<const Vec2> cols, Vec2 y);

}  // namespace toricsg
