#pragma once

#include <optional>
#include <vector>

#include "semiconvex/scene2.hpp"

namespace semiconvex {

struct Vec3 {
    Rat x, y, z;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Rat& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Rational interval with per-end open/closed flags and optional
/// unbounded ends; the working type for exact 1D feasibility.
struct RInterval {
    bool empty = false;
    bool lo_unbounded = true, hi_unbounded = true;
    Rat lo, hi;
    bool lo_open = false, hi_open = false;

    static RInterval everything() { return RInterval{}; }
    static RInterval nothing() {
        RInterval r;
        r.empty = true;
        return r;
    }

    /// Intersects with {s : c + m*s > 0} (strict) or >= 0.
    void add_constraint(const Rat& c, const Rat& m, bool strict);
    void normalize();  // collapses to empty when the bounds cross
    bool is_empty() const { return empty; }
    /// Some rational point inside; pre: not empty.
    Rat pick() const;
};

enum class NdLoc { InE, OnBoundary, Outside };

/// Oblique prism: the convex base polygon placed in the plane z = z0 and
/// swept along the axis over t in (t0, t1) with per-end open/closed flags.
/// The 2D base is always open; only the sweep ends carry flags. The point
/// at (b, t) is (b.x + t*ax, b.y + t*ay, z0 + t*az).
struct Prism {
    ConvexPoly base;
    Rat z0;
    Vec3 axis;  // axis.z != 0
    Rat t0, t1;
    bool closed_lo = false, closed_hi = false;
};

/// Membership honoring the sweep flags (the set the prism denotes).
bool prism_member(const Prism& pr, const Vec3& p);
/// Membership in the closure.
bool prism_closure_member(const Prism& pr, const Vec3& p);

/// Exact parameter interval {s : o + s*d in prism-set}; the projection of
/// the ray parallel to the prism axis onto the base plane reduces this to
/// 2D half-plane constraints plus the sweep range.
RInterval prism_chord(const Prism& pr, const Vec3& o, const Vec3& d);

/// Convex polytope as an exact half-space intersection, built by brute
/// force over all supporting planes of a small point set.
struct Hull3 {
    /// Constraint a*x + b*y + c*z + d <= 0 holds on the hull (closed).
    struct Plane {
        Rat a, b, c, d;
        Rat eval(const Vec3& p) const { return a * p.x + b * p.y + c * p.z + d; }
    };
    std::vector<Plane> planes;
    std::vector<Vec3> points;

    bool contains_open(const Vec3& p) const;
    bool contains_closed(const Vec3& p) const;
    /// Outward direction n with <n, x - p> <= 0 for the whole hull; exists
    /// iff p is not interior.
    std::optional<Vec3> separating_normal(const Vec3& p) const;
    /// {s : o + s*d interior to the hull}.
    RInterval chord(const Vec3& o, const Vec3& d) const;
};

Hull3 build_hull3(const std::vector<Vec3>& pts);

/// Union-of-prisms scene with an optional lazily materialized stack of
/// floors (the unbounded construction). Floor f spans z in
/// ((f-1)*rho, f*rho); odd floors sweep upward with both ends closed, even
/// floors sweep downward with both ends open, so consecutive floors glue
/// into an open set.
struct Scene3 {
    std::vector<Prism> fixed;  // caps and, for bounded scenes, everything

    struct FloorGen {
        std::vector<ConvexPoly> bases;  // convex pieces swept per floor
        Point2 shift;                   // horizontal axis displacement
        Rat rho;                        // vertical extent per floor
        int budget = 0;                 // floors 0..budget-1 may materialize
    };
    std::optional<FloorGen> gen;
    mutable std::vector<Prism> floors;  // append-only cache
    mutable int floors_done = 0;

    /// Materializes floors 0..upto; false when the budget forbids it.
    bool ensure_floors(int upto) const;
    /// Largest floor index the ray can touch, or nullopt when unbounded
    /// (an upward ray in a stacked scene).
    std::optional<int> max_floor_for_ray(const Vec3& o, const Vec3& d) const;

    std::optional<NdLoc> contains(const Vec3& p) const;  // nullopt: beyond budget
    bool has_stack() const { return gen.has_value(); }
};

Prism make_floor_prism(const ConvexPoly& base, const Scene3::FloorGen& g, int f);

/// All horizontal cross-sections of solids at the given height, each a
/// translate of its base. single_convex is set when exactly one solid
/// contributes. nullopt when the height needs floors beyond the budget.
struct SliceResult {
    Scene2 scene;
    bool empty = false;
    bool single_convex = false;
};
std::optional<SliceResult> horizontal_slice(const Scene3& s, const Rat& height);

}  // namespace semiconvex
