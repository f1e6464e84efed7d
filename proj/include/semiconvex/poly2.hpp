#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semiconvex/geom2.hpp"

namespace semiconvex {

/// Strictly convex polygon, vertices counterclockwise, no three collinear.
/// Interpreted as an OPEN set wherever it models a piece of a scene.
struct ConvexPoly {
    std::vector<Point2> v;

    int size() const { return static_cast<int>(v.size()); }
    const Point2& vertex(int i) const { return v[((i % size()) + size()) % size()]; }
};

enum class PointLoc { Interior, Boundary, Outside };

struct LocateResult {
    PointLoc loc = PointLoc::Outside;
    int edge = -1;    // p strictly inside edge (v[edge], v[edge+1])
    int vertex = -1;  // p == v[vertex]
};

/// Throws if the loop is not a strictly convex counterclockwise polygon.
ConvexPoly make_poly(std::vector<Point2> vertices);

/// Drops duplicate and collinear vertices, then validates; nullopt when the
/// loop has no interior.
std::optional<ConvexPoly> canonical_poly(std::vector<Point2> loop);

bool is_strictly_convex_ccw(const std::vector<Point2>& v);

Rat poly_area(const ConvexPoly& p);
Point2 poly_centroid(const ConvexPoly& p);
AABB poly_bbox(const ConvexPoly& p);

LocateResult locate_point(const ConvexPoly& q, const Point2& p);

/// Open parameter interval {t : origin + t*dir is interior to q}; nullopt if
/// the line misses the interior. Bounded polygons give finite endpoints.
struct Interval {
    Rat lo, hi;  // open (lo, hi), lo < hi
    Rat mid() const { return (lo + hi) / Rat(2); }
};
std::optional<Interval> chord_interval_vec(const ConvexPoly& q, const Point2& origin,
                                           const Point2& vec);
std::optional<Interval> chord_interval(const ConvexPoly& q, const Point2& origin, const Dir2& dir);

/// Restriction of chord_interval to t >= 0 (ray), still open.
std::optional<Interval> ray_chord(const ConvexPoly& q, const Ray2& r);

bool ray_hits_poly_interior(const Ray2& r, const ConvexPoly& q);
bool line_hits_poly_interior(const Line2Param& l, const ConvexPoly& q);

/// Exact separating-axis test over both edge sets; true iff the open
/// interiors share a point (boundary contact alone is not enough).
bool polys_interiors_intersect(const ConvexPoly& a, const ConvexPoly& b);

/// Strict counterclockwise hull; collinear points dropped.
/// Throws on fewer than 3 points or an all-collinear input.
ConvexPoly convex_hull(std::vector<Point2> points);

/// Closed half-plane clip: keeps {p : sign * line.eval(p) >= 0}. The result
/// may be degenerate (empty or measure zero) and is NOT canonicalized.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& loop, const Line2& line, int sign);

/// Splits q by the line into (negative side, positive side) canonical polys.
/// A side the line does not strictly cross comes back as the input poly.
std::pair<std::optional<ConvexPoly>, std::optional<ConvexPoly>> split_poly(const ConvexPoly& q,
                                                                           const Line2& line);

/// Exact area of the intersection of two convex polygons.
Rat intersection_area(const ConvexPoly& a, const ConvexPoly& b);

/// Blocked open arc of directions (lo, hi) subtended by q from an outside
/// point y: a ray from y in direction d meets interior(q) iff d is strictly
/// inside the arc. Pre: y outside closure(q).
struct TangentSpan {
    Dir2 lo, hi;
};
TangentSpan tangent_span(const ConvexPoly& q, const Point2& y);

/// l-infinity distance from p to the closed segment [a, b].
Rat linf_point_segment(const Point2& p, const Point2& a, const Point2& b);

/// l-infinity distance from p to closure(q); zero when p is not outside.
Rat linf_point_poly(const Point2& p, const ConvexPoly& q);

/// l-infinity clearance of an interior point to the polygon boundary.
Rat linf_clearance(const Point2& p, const ConvexPoly& q);

/// True iff the open axis-aligned square of half-side r at c lies inside the
/// open polygon (the square's closure may touch the boundary). Exact.
bool open_square_in_poly(const Point2& c, const Rat& r, const ConvexPoly& q);

/// Axis-aligned square of half-side r > 0 centered at c.
ConvexPoly make_square(const Point2& c, const Rat& r);

}  // namespace semiconvex
