#pragma once

#include <string>
#include <vector>

#include "toricsg/lattice.hpp"
#include "toricsg/numsgp.hpp"

namespace toricsg {

enum class ValidationFailure { ZeroGenerator, NotPointed, NotGenerating };

std::string to_string(ValidationFailure f);

struct ValidationError : std::runtime_error {
    ValidationFailure kind;
    explicit ValidationError(ValidationFailure k)
        : std::runtime_error("invalid generator set: " + to_string(k)), kind(k) {}
};

/// Primitive direction vector (coordinate gcd 1, nonzero).
struct Ray {
    Vec2 r;
    friend bool operator==(Ray a, Ray b) { return a.r == b.r; }
};

Vec2 primitive(Vec2 v);

/// A one-dimensional face of the semigroup: the set of lattice points on an
/// extreme ray that actually belong to S. On-ray generators k*r are recorded
/// by their coefficients k; their gcd d scales the primitive ray to the
/// asymptotic generator a = d*r, and the reduced coefficient semigroup
/// <k/d> carries the gap structure.
struct Face {
    Ray ray;
    std::vector<i64> coefficients;  // {k : k*r is an input generator}, sorted
    i64 d = 1;                      // gcd(coefficients)
    Vec2 asymptotic_generator;      // d * r
    NumericalSemigroup ns;          // reduced coefficient semigroup <k/d>
    std::vector<i64> gaps;          // coefficient scale: d * (reduced gaps)
    i64 conductor = 0;              // coefficient scale: d * ns.conductor

    /// Is k*ray.r an element of S?  (k in coefficient units)
    bool contains_coefficient(i64 k) const {
        return k == 0 || (k > 0 && k % d == 0 && ns.member(k / d));
    }
};

/// A validated pointed generating subsemigroup of Z^2 with its cone data.
/// Immutable after construction.
class ToricSemigroup {
  public:
    /// Canonicalizes (dedup + sort) and validates the generator set.
    /// Throws ValidationError on ZeroGenerator / NotPointed / NotGenerating.
    static ToricSemigroup validate(std::vector<Vec2> gens);

    const std::vector<Vec2>& generators() const { return gens_; }
    Ray ray(int j) const { return j == 1 ? r1_ : r2_; }          // j in {1,2}
    const Face& face(int j) const { return j == 1 ? f1_ : f2_; }
    Vec2 asymptotic_generator(int j) const { return face(j).asymptotic_generator; }
    /// det(a1, a2) > 0 by the ordering convention.
    i64 det_a() const { return cross(f1_.asymptotic_generator, f2_.asymptotic_generator); }

    /// p in the saturation = the rational cone spanned by the rays.
    bool saturation_member(Vec2 p) const {
        return cross(r1_.r, p) >= 0 && cross(p, r2_.r) >= 0;
    }

    friend bool operator==(const ToricSemigroup& a, const ToricSemigroup& b) {
        return a.gens_ == b.gens_;
    }

  private:
    ToricSemigroup() = default;
    std::vector<Vec2> gens_;  // canonical: sorted, unique
    Ray r1_, r2_;             // det(r1, r2) > 0
    Face f1_, f2_;
};

/// Face data for one extreme ray of a validated semigroup (also available
/// via ToricSemigroup::face; exposed for direct testing).
Face analyze_face(const std::vector<Vec2>& gens, Ray ray);

}  // namespace toricsg
