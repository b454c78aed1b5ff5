#include "toricsg/semigroup.hpp"

#include <algorithm>

namespace toricsg {

std::string to_string(ValidationFailure f) {
    switch (f) {
        case ValidationFailure::ZeroGenerator: return "ZeroGenerator";
        case ValidationFailure::NotPointed: return "NotPointed";
        case ValidationFailure::NotGenerating: return "NotGenerating";
    }
    return "?";
}

Vec2 primitive(Vec2 v) {
    i64 g = gcd_nonneg(v.x, v.y);
    return g == 0 ? v : Vec2{v.x / g, v.y / g};
}

namespace {

// A generator g is angularly extreme on the clockwise side iff every other
// generator h lies strictly counterclockwise of it or on the same ray.
// Pointedness is equivalent to the existence of such an extreme direction,
// all comparisons exact.
bool extreme_on_side(const std::vector<Vec2>& gens, Vec2 g, int sign) {
    for (Vec2 h : gens) {
        i64 c = sign * cross(g, h);
        if (c > 0) continue;
        if (c == 0 && dot(g, h) > 0) continue;  // same ray
        return false;
    }
    return true;
}

}  // namespace

Face analyze_face(const std::vector<Vec2>& gens, Ray ray) {
    Face f;
    f.ray = ray;
    for (Vec2 g : gens) {
        if (cross(ray.r, g) != 0) continue;
        // g = k * r with k > 0 (r primitive, g on the closed ray)
        i64 k = ray.r.x != 0 ? g.x / ray.r.x : g.y / ray.r.y;
        f.coefficients.push_back(k);
    }
    std::sort(f.coefficients.begin(), f.coefficients.end());
    f.ns = analyze_numerical_semigroup(f.coefficients);
    f.d = f.ns.d;
    f.asymptotic_generator = f.d * ray.r;
    for (i64 g : f.ns.gaps) f.gaps.push_back(chk_mul(f.d, g));
    f.conductor = chk_mul(f.d, f.ns.conductor);
    return f;
}

ToricSemigroup ToricSemigroup::validate(std::vector<Vec2> gens) {
    if (gens.empty()) throw ValidationError{ValidationFailure::ZeroGenerator};
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (Vec2 g : gens)
        if (g.is_zero()) throw ValidationError{ValidationFailure::ZeroGenerator};

    // Pointedness: some generator direction is extreme on each side, i.e.
    // all generators fit in an open half-plane.
    Vec2 r1{0, 0}, r2{0, 0};
    bool have1 = false, have2 = false;
    for (Vec2 g : gens) {
        if (!have1 && extreme_on_side(gens, g, +1)) { r1 = g; have1 = true; }
        if (!have2 && extreme_on_side(gens, g, -1)) { r2 = g; have2 = true; }
    }
    if (!have1 || !have2) throw ValidationError{ValidationFailure::NotPointed};

    // Group-generation: the columns must span all of Z^2.
    if (!cokernel_of_columns(gens).is_trivial())
        throw ValidationError{ValidationFailure::NotGenerating};

    ToricSemigroup S;
    S.gens_ = std::move(gens);
    S.r1_ = Ray{primitive(r1)};
    S.r2_ = Ray{primitive(r2)};
    // rank 2 and pointed, so the rays are distinct with det(r1, r2) > 0
    S.f1_ = analyze_face(S.gens_, S.r1_);
    S.f2_ = analyze_face(S.gens_, S.r2_);
    return S;
}

}  // namespace toricsg
