#include "semiconvex/geom2.hpp"

#include <stdexcept>

namespace semiconvex {

int orient(const Point2& a, const Point2& b, const Point2& c) {
    return cross(b - a, c - a).sign();
}

Dir2::Dir2(const Rat& rx, const Rat& ry) {
    if (rx.is_zero() && ry.is_zero()) throw std::invalid_argument("Dir2: zero vector");
    // Clear denominators, then divide out the content. The positive scale
    // factor preserves the direction; signs are kept as given.
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), rx.den().get_mpz_t(), ry.den().get_mpz_t());
    mpz_class ix = rx.num() * (l / rx.den());
    mpz_class iy = ry.num() * (l / ry.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
    dx = ix / g;
    dy = iy / g;
}

Dir2 Dir2::antipode() const {
    Dir2 d;
    d.dx = -dx;
    d.dy = -dy;
    return d;
}

Dir2 Dir2::perp() const {
    Dir2 d;
    d.dx = -dy;
    d.dy = dx;
    return d;
}

int dir_quadrant(const Dir2& d) {
    int sx = sgn(d.dx), sy = sgn(d.dy);
    if (sx > 0 && sy == 0) return 0;
    if (sx > 0 && sy > 0) return 1;
    if (sx == 0 && sy > 0) return 2;
    if (sx < 0 && sy > 0) return 3;
    if (sx < 0 && sy == 0) return 4;
    if (sx < 0 && sy < 0) return 5;
    if (sx == 0 && sy < 0) return 6;
    return 7;
}

int dir_cmp(const Dir2& a, const Dir2& b) {
    int qa = dir_quadrant(a), qb = dir_quadrant(b);
    if (qa != qb) return qa < qb ? -1 : 1;
    // Same octant: counterclockwise order is the sign of the cross product.
    int s = sgn(cross(a, b));
    return s > 0 ? -1 : (s < 0 ? 1 : 0);
}

bool dir_in_open_arc(const Dir2& s, const Dir2& e, const Dir2& d) {
    if (s == e) return d != s;  // punctured full circle
    int cs = dir_cmp(s, e);
    if (cs < 0) return dir_cmp(s, d) < 0 && dir_cmp(d, e) < 0;
    // Arc wraps past (1,0).
    return dir_cmp(s, d) < 0 || dir_cmp(d, e) < 0;
}

Dir2 arc_interior_dir(const Dir2& s, const Dir2& e) {
    if (s == e) return s.antipode();
    mpz_class c = cross(s, e);
    int cs = sgn(c);
    if (cs > 0) {
        // Extent below pi: any positive combination lies inside.
        return Dir2(Rat(s.dx + e.dx), Rat(s.dy + e.dy));
    }
    if (cs == 0) {
        // Antipodal endpoints: extent exactly pi.
        return s.perp();
    }
    // Extent above pi: the antipode of the short-way midpoint is inside.
    return Dir2(Rat(-(s.dx + e.dx)), Rat(-(s.dy + e.dy)));
}

Dir2 circle_direction(unsigned k, unsigned n) {
    if (n == 0 || n % 4 != 0) throw std::invalid_argument("circle_direction: n must be divisible by 4");
    k %= n;
    unsigned per = n / 4;
    unsigned quad = k / per;
    // t in [0,1) is the tan-half-angle parameter within the quadrant:
    // (1 - t^2, 2t) sweeps angles [0, pi/2) monotonically.
    Rat t(static_cast<long>(k % per), static_cast<long>(per));
    Rat x = Rat(1) - t * t;
    Rat y = Rat(2) * t;
    switch (quad) {
        case 0: return Dir2(x, y);
        case 1: return Dir2(-y, x);
        case 2: return Dir2(-x, -y);
        default: return Dir2(y, -x);
    }
}

Line2 Line2::through(const Point2& p, const Point2& q) {
    if (p == q) throw std::invalid_argument("Line2::through: coincident points");
    Rat ra = p.y - q.y;
    Rat rb = q.x - p.x;
    Rat rc = p.x * q.y - q.x * p.y;
    // Clear denominators and reduce to coprime integers with a canonical sign.
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), ra.den().get_mpz_t(), rb.den().get_mpz_t());
    mpz_class l2;
    mpz_lcm(l2.get_mpz_t(), l.get_mpz_t(), rc.den().get_mpz_t());
    mpz_class ia = ra.num() * (l2 / ra.den());
    mpz_class ib = rb.num() * (l2 / rb.den());
    mpz_class ic = rc.num() * (l2 / rc.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
    ia /= g;
    ib /= g;
    ic /= g;
    int lead = sgn(ia) != 0 ? sgn(ia) : sgn(ib);
    if (lead < 0) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    Line2 ln;
    ln.a = ia;
    ln.b = ib;
    ln.c = ic;
    return ln;
}

Line2 Line2::from_point_dir(const Point2& p, const Dir2& d) {
    return Line2::through(p, p + d.point());
}

std::optional<Point2> line_intersection(const Line2& l, const Line2& m) {
    mpz_class det = l.a * m.b - m.a * l.b;
    if (det == 0) return std::nullopt;
    Rat x(l.b * m.c - m.b * l.c, det);
    Rat y(m.a * l.c - l.a * m.c, det);
    return Point2{x, y};
}

}  // namespace semiconvex
