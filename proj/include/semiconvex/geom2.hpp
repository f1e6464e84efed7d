#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiconvex/rat.hpp"

namespace semiconvex {

struct Point2 {
    Rat x, y;
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Rat& s, const Point2& a) { return {s * a.x, s * a.y}; }
inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }

inline Rat cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

/// Sign of the turn a -> b -> c: +1 left, 0 collinear, -1 right. Exact.
int orient(const Point2& a, const Point2& b, const Point2& c);

/// Squared Euclidean norm (stays rational; lengths themselves never appear).
inline Rat norm2(const Point2& u) { return dot(u, u); }

/// l-infinity norm.
inline Rat linf(const Point2& u) { return max(abs(u.x), abs(u.y)); }

/// A nonzero direction on the circle of directions. Canonical form is the
/// coprime integer vector with the original sign pattern, so two directions
/// compare equal exactly when they are positive multiples of each other.
/// Antipodal directions stay distinct.
struct Dir2 {
    mpz_class dx, dy;

    Dir2() : dx(0), dy(0) {}
    Dir2(const Rat& rx, const Rat& ry);
    Dir2(long ix, long iy) : Dir2(Rat(ix), Rat(iy)) {}

    Dir2 antipode() const;
    /// Rotation by +90 degrees.
    Dir2 perp() const;
    Point2 point() const { return {Rat(dx), Rat(dy)}; }

    std::string str() const { return "(" + dx.get_str() + "," + dy.get_str() + ")"; }
};

inline bool operator==(const Dir2& a, const Dir2& b) { return a.dx == b.dx && a.dy == b.dy; }
inline bool operator!=(const Dir2& a, const Dir2& b) { return !(a == b); }

inline mpz_class cross(const Dir2& a, const Dir2& b) { return a.dx * b.dy - a.dy * b.dx; }
inline mpz_class dot(const Dir2& a, const Dir2& b) { return a.dx * b.dx + a.dy * b.dy; }

/// Index of the half-open octant sweep starting at +x, counterclockwise.
/// Even indices are the axis directions themselves.
int dir_quadrant(const Dir2& d);

/// Total cyclic order on directions starting at (1,0), counterclockwise:
/// -1 if a before b, 0 if equal, +1 if a after b.
int dir_cmp(const Dir2& a, const Dir2& b);

/// True iff d lies strictly inside the open arc swept counterclockwise from
/// s to e. For s == e the arc is the full circle minus the point s.
bool dir_in_open_arc(const Dir2& s, const Dir2& e, const Dir2& d);

/// Some rational direction strictly inside the open arc (s, e).
Dir2 arc_interior_dir(const Dir2& s, const Dir2& e);

/// The k-th of n "evenly indexed" rational directions (n divisible by 4).
/// Within each quadrant the fraction is a tan-half-angle parameter, so the
/// sequence is strictly increasing in the cyclic order and exactly hits the
/// four axis directions.
Dir2 circle_direction(unsigned k, unsigned n);

struct Ray2 {
    Point2 origin;
    Dir2 dir;
};

struct Line2Param {
    Point2 origin;
    Dir2 dir;
};

/// Canonical homogeneous line a*x + b*y + c = 0 with coprime integer
/// coefficients, leading nonzero of (a, b) positive. Undirected.
struct Line2 {
    mpz_class a, b, c;

    static Line2 through(const Point2& p, const Point2& q);
    static Line2 from_point_dir(const Point2& p, const Dir2& d);

    Rat eval(const Point2& p) const { return Rat(a) * p.x + Rat(b) * p.y + Rat(c); }
    int side(const Point2& p) const { return eval(p).sign(); }
    Dir2 direction() const { return Dir2(Rat(b), Rat(-a)); }

    friend bool operator==(const Line2& l, const Line2& m) {
        return l.a == m.a && l.b == m.b && l.c == m.c;
    }
    friend bool operator<(const Line2& l, const Line2& m) {
        if (l.a != m.a) return l.a < m.a;
        if (l.b != m.b) return l.b < m.b;
        return l.c < m.c;
    }
};

/// Intersection point of two non-parallel lines.
std::optional<Point2> line_intersection(const Line2& l, const Line2& m);

struct AABB {
    Point2 min, max;

    bool contains(const Point2& p) const {
        return min.x <= p.x && p.x <= max.x && min.y <= p.y && p.y <= max.y;
    }
};

}  // namespace semiconvex
