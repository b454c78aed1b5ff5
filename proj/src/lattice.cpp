#include "toricsg/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace toricsg {

ExtGcd ext_gcd(i64 a, i64 b) {
    // Iterative Euclid carrying the Bezout rows (r, u, v) with u*a + v*b = r.
    i64 r0 = a, u0 = 1, v0 = 0;
    i64 r1 = b, u1 = 0, v1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = chk_sub(r0, chk_mul(q, r1));
        i64 u2 = chk_sub(u0, chk_mul(q, u1));
        i64 v2 = chk_sub(v0, chk_mul(q, v1));
        r0 = r1; u0 = u1; v0 = v1;
        r1 = r2; u1 = u2; v1 = v2;
    }
    if (r0 < 0) { r0 = chk_neg(r0); u0 = chk_neg(u0); v0 = chk_neg(v0); }
    return {r0, u0, v0};
}

namespace {

// Left-multiply rows (i, k) of both W and U by the unimodular 2x2
// [[u, v], [-b/g, a/g]] built from ext_gcd(a, b); afterwards W[i][pivot] = g
// and W[k][pivot] = 0. Specialized to 2x2 so rows are just (top, bottom).
void row_reduce(IntMatrix2& W, IntMatrix2& U) {
    if (W.c == 0) return;
    if (W.a != 0 && W.c % W.a == 0) {
        // plain elimination keeps the pivot fixed (the Bezout transform
        // below may rotate rows and cycle when gcd == |pivot|)
        i64 q = W.c / W.a;
        IntMatrix2 T{1, 0, chk_neg(q), 1};
        W = T * W;
        U = T * U;
        return;
    }
    auto [g, u, v] = ext_gcd(W.a, W.c);
    i64 p = W.a / g, q = W.c / g;
    IntMatrix2 T{u, v, chk_neg(q), p};  // det = u*p + v*q = 1
    W = T * W;
    U = T * U;
}

void col_reduce(IntMatrix2& W, IntMatrix2& V) {
    if (W.b == 0) return;
    if (W.a != 0 && W.b % W.a == 0) {
        i64 q = W.b / W.a;
        IntMatrix2 T{1, chk_neg(q), 0, 1};
        W = W * T;
        V = V * T;
        return;
    }
    auto [g, u, v] = ext_gcd(W.a, W.b);
    i64 p = W.a / g, q = W.b / g;
    IntMatrix2 T{u, chk_neg(q), v, p};
    W = W * T;
    V = V * T;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix2& A) {
    IntMatrix2 W = A;
    IntMatrix2 U = IntMatrix2::identity();
    IntMatrix2 V = IntMatrix2::identity();

    // Move a nonzero entry to the (0,0) corner if there is one.
    if (W.a == 0) {
        if (W.b != 0) {
            W = W * IntMatrix2{0, 1, 1, 0};
            V = V * IntMatrix2{0, 1, 1, 0};
        } else if (W.c != 0) {
            W = IntMatrix2{0, 1, 1, 0} * W;
            U = IntMatrix2{0, 1, 1, 0} * U;
        } else if (W.d != 0) {
            W = IntMatrix2{0, 1, 1, 0} * W * IntMatrix2{0, 1, 1, 0};
            U = IntMatrix2{0, 1, 1, 0} * U;
            V = V * IntMatrix2{0, 1, 1, 0};
        }
    }

    while (W.b != 0 || W.c != 0) {
        row_reduce(W, U);
        col_reduce(W, V);
    }

    // Enforce d1 | d2: fold the second column into the first and re-reduce.
    if (W.a != 0 && W.d % W.a != 0) {
        W = W * IntMatrix2{1, 0, 1, 1};
        V = V * IntMatrix2{1, 0, 1, 1};
        while (W.b != 0 || W.c != 0) {
            row_reduce(W, U);
            col_reduce(W, V);
        }
    }

    if (W.a < 0) {
        W.a = chk_neg(W.a);
        U = IntMatrix2{-1, 0, 0, 1} * U;
    }
    if (W.d < 0) {
        W.d = chk_neg(W.d);
        U = IntMatrix2{1, 0, 0, -1} * U;
    }
    return {U, V, W.a, W.d};
}

i64 AbelianGroup::order() const {
    if (free_rank > 0) return 0;
    i64 n = 1;
    for (i64 t : torsion) n = chk_mul(n, t);
    return n;
}

std::string AbelianGroup::str() const {
    std::string s;
    for (int i = 0; i < free_rank; ++i) s += s.empty() ? "Z" : " + Z";
    for (i64 t : torsion) s += (s.empty() ? "Z/" : " + Z/") + std::to_string(t);
    return s.empty() ? "0" : s;
}

AbelianGroup cokernel_invariants(const IntMatrix2& A) {
    SmithDecomposition snf = smith_normal_form(A);
    AbelianGroup g;
    for (i64 d : {snf.d1, snf.d2}) {
        if (d == 0)
            ++g.free_rank;
        else if (d >= 2)
            g.torsion.push_back(d);
    }
    return g;
}

namespace {

// Column Hermite reduction of a 2xm matrix. Sweeps `row` over columns
// [from, m): accumulates the row's gcd into column `from` and zeroes the
// row in all later columns. Q receives the same column operations.
void hermite_sweep(std::vector<Vec2>& cols, std::vector<std::vector<i64>>& Q,
                   int row, std::size_t from) {
    auto entry = [row](const Vec2& v) { return row == 0 ? v.x : v.y; };
    std::size_t m = cols.size();
    for (std::size_t j = from + 1; j < m; ++j) {
        if (entry(cols[j]) == 0) continue;
        auto [g, u, v] = ext_gcd(entry(cols[from]), entry(cols[j]));
        i64 p = entry(cols[from]) / g, q = entry(cols[j]) / g;
        Vec2 nf = u * cols[from] + v * cols[j];
        Vec2 nj = chk_neg(q) * cols[from] + p * cols[j];
        cols[from] = nf;
        cols[j] = nj;
        if (!Q.empty()) {
            for (std::size_t i = 0; i < Q.size(); ++i) {
                i64 qf = chk_add(chk_mul(u, Q[i][from]), chk_mul(v, Q[i][j]));
                i64 qj = chk_add(chk_mul(chk_neg(q), Q[i][from]), chk_mul(p, Q[i][j]));
                Q[i][from] = qf;
                Q[i][j] = qj;
            }
        }
    }
}

}  // namespace

IntMatrix2 lattice_basis_of_columns(std::span<const Vec2> cols_in) {
    std::vector<Vec2> cols(cols_in.begin(), cols_in.end());
    std::vector<std::vector<i64>> no_q;  // transform not needed
    if (cols.empty()) return IntMatrix2{};
    hermite_sweep(cols, no_q, 0, 0);
    std::size_t start = cols[0].x != 0 ? 1 : 0;
    if (start < cols.size()) hermite_sweep(cols, no_q, 1, start);

    // The column lattice is spanned by at most two triangular columns.
    Vec2 c1 = start == 1 ? cols[0] : Vec2{0, 0};
    Vec2 c2 = start < cols.size() ? cols[start] : Vec2{0, 0};
    if (c1.x < 0) c1 = -c1;
    if (c2.y < 0) c2 = -c2;
    return IntMatrix2::from_columns(c1, c2);
}

AbelianGroup cokernel_of_columns(std::span<const Vec2> cols) {
    return cokernel_invariants(lattice_basis_of_columns(cols));
}

std::optional<std::vector<i64>> solve_diophantine(std::span<const Vec2> cols_in, Vec2 y) {
    std::size_t m = cols_in.size();
    assert(m >= 1);
    std::vector<Vec2> cols(cols_in.begin(), cols_in.end());
    std::vector<std::vector<i64>> Q(m, std::vector<i64>(m, 0));
    for (std::size_t i = 0; i < m; ++i) Q[i][i] = 1;

    hermite_sweep(cols, Q, 0, 0);
    std::size_t p1 = cols[0].x != 0 ? 1 : 0;
    if (p1 < m) hermite_sweep(cols, Q, 1, p1);

    // Solve the triangular system H * c' = y, then map back through Q.
    std::vector<i64> cp(m, 0);
    Vec2 rem = y;
    if (cols[0].x != 0) {
        if (rem.x % cols[0].x != 0) return std::nullopt;
        cp[0] = rem.x / cols[0].x;
        rem = rem - cp[0] * cols[0];
    } else if (rem.x != 0) {
        return std::nullopt;
    }
    if (p1 < m && cols[p1].y != 0) {
        if (rem.y % cols[p1].y != 0) return std::nullopt;
        cp[p1] = rem.y / cols[p1].y;
        rem = rem - cp[p1] * cols[p1];
    }
    if (!rem.is_zero()) return std::nullopt;

    std::vector<i64> c(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        i64 acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc = chk_add(acc, chk_mul(Q[i][j], cp[j]));
        c[i] = acc;
    }

    // Size-reduce the solution against the kernel lattice: columns of Q over
    // zeroed columns of the Hermite form span ker(cols). Keeps coefficients
    // small so downstream constructions stay within enumeration range.
    std::vector<std::vector<i64>> kernel;
    for (std::size_t j = 0; j < m; ++j) {
        if (cols[j].is_zero()) {
            std::vector<i64> k(m);
            bool zero = true;
            for (std::size_t i = 0; i < m; ++i) {
                k[i] = Q[i][j];
                zero = zero && k[i] == 0;
            }
            if (!zero) kernel.push_back(std::move(k));
        }
    }
    for (int pass = 0; pass < 4; ++pass)
        for (const auto& k : kernel) {
            i64 num = 0, den = 0;
            for (std::size_t i = 0; i < m; ++i) {
                num = chk_add(num, chk_mul(c[i], k[i]));
                den = chk_add(den, chk_mul(k[i], k[i]));
            }
            i64 t = floor_div(chk_add(2 * num, den), 2 * den);  // round(num/den)
            if (t == 0) continue;
            for (std::size_t i = 0; i < m; ++i) c[i] = chk_sub(c[i], chk_mul(t, k[i]));
        }

    // Exactness check by multiplication.
    Vec2 check{0, 0};
    for (std::size_t j = 0; j < m; ++j) check = check + c[j] * cols_in[j];
    assert(check == y);
    return c;
}

}  // namespace toricsg
