#include "semiconvex/poly2.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiconvex {

bool is_strictly_convex_ccw(const std::vector<Point2>& v) {
    int n = static_cast<int>(v.size());
    if (n < 3) return false;
    for (int i = 0; i < n; ++i) {
        if (orient(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) != 1) return false;
    }
    return true;
}

ConvexPoly make_poly(std::vector<Point2> vertices) {
    if (!is_strictly_convex_ccw(vertices))
        throw std::invalid_argument("make_poly: not a strictly convex counterclockwise polygon");
    return ConvexPoly{std::move(vertices)};
}

std::optional<ConvexPoly> canonical_poly(std::vector<Point2> loop) {
    // Drop consecutive duplicates (with wraparound).
    std::vector<Point2> w;
    for (const auto& p : loop) {
        if (w.empty() || !(w.back() == p)) w.push_back(p);
    }
    while (w.size() >= 2 && w.front() == w.back()) w.pop_back();
    // Drop collinear vertices until stable.
    bool changed = true;
    while (changed && w.size() >= 3) {
        changed = false;
        std::vector<Point2> out;
        int n = static_cast<int>(w.size());
        for (int i = 0; i < n; ++i) {
            if (orient(w[(i + n - 1) % n], w[i], w[(i + 1) % n]) == 0) {
                changed = true;
            } else {
                out.push_back(w[i]);
            }
        }
        w = std::move(out);
    }
    if (w.size() < 3 || !is_strictly_convex_ccw(w)) return std::nullopt;
    return ConvexPoly{std::move(w)};
}

Rat poly_area(const ConvexPoly& p) {
    Rat s(0);
    int n = p.size();
    for (int i = 0; i < n; ++i) s += cross(p.v[i], p.v[(i + 1) % n]);
    return s / Rat(2);
}

Point2 poly_centroid(const ConvexPoly& p) {
    Rat sx(0), sy(0);
    for (const auto& q : p.v) {
        sx += q.x;
        sy += q.y;
    }
    Rat n(static_cast<long>(p.size()));
    return {sx / n, sy / n};
}

AABB poly_bbox(const ConvexPoly& p) {
    AABB box{p.v[0], p.v[0]};
    for (const auto& q : p.v) {
        box.min.x = min(box.min.x, q.x);
        box.min.y = min(box.min.y, q.y);
        box.max.x = max(box.max.x, q.x);
        box.max.y = max(box.max.y, q.y);
    }
    return box;
}

LocateResult locate_point(const ConvexPoly& q, const Point2& p) {
    int n = q.size();
    int on_edge = -1;
    for (int i = 0; i < n; ++i) {
        int s = orient(q.v[i], q.v[(i + 1) % n], p);
        if (s < 0) return {PointLoc::Outside, -1, -1};
        if (s == 0) on_edge = i;
    }
    if (on_edge < 0) return {PointLoc::Interior, -1, -1};
    // p is on the supporting line of some edge and inside all other closed
    // half-planes, hence on the boundary; identify vertex vs edge interior.
    for (int i = 0; i < n; ++i) {
        if (q.v[i] == p) return {PointLoc::Boundary, -1, i};
    }
    for (int i = 0; i < n; ++i) {
        const Point2& a = q.v[i];
        const Point2& b = q.v[(i + 1) % n];
        if (orient(a, b, p) == 0 && dot(p - a, b - a).sign() > 0 && dot(p - b, a - b).sign() > 0) {
            return {PointLoc::Boundary, i, -1};
        }
    }
    return {PointLoc::Boundary, on_edge, -1};
}

std::optional<Interval> chord_interval_vec(const ConvexPoly& q, const Point2& origin,
                                           const Point2& d) {
    // orient(v_i, v_{i+1}, origin + t*d) = c_i + t*s_i must be > 0 for all i.
    bool has_lo = false, has_hi = false;
    Rat lo, hi;
    int n = q.size();
    for (int i = 0; i < n; ++i) {
        Point2 e = q.v[(i + 1) % n] - q.v[i];
        Rat s = cross(e, d);
        Rat c = cross(e, origin - q.v[i]);
        int ss = s.sign();
        if (ss == 0) {
            if (c.sign() <= 0) return std::nullopt;
        } else if (ss > 0) {
            Rat t = -c / s;
            if (!has_lo || t > lo) {
                lo = t;
                has_lo = true;
            }
        } else {
            Rat t = -c / s;
            if (!has_hi || t < hi) {
                hi = t;
                has_hi = true;
            }
        }
    }
    if (!has_lo || !has_hi) return std::nullopt;  // unbounded: impossible for valid polys
    if (!(lo < hi)) return std::nullopt;
    return Interval{lo, hi};
}

std::optional<Interval> chord_interval(const ConvexPoly& q, const Point2& origin, const Dir2& dir) {
    return chord_interval_vec(q, origin, dir.point());
}

std::optional<Interval> ray_chord(const ConvexPoly& q, const Ray2& r) {
    auto iv = chord_interval(q, r.origin, r.dir);
    if (!iv) return std::nullopt;
    if (iv->hi.sign() <= 0) return std::nullopt;
    if (iv->lo.sign() < 0) iv->lo = Rat(0);
    if (!(iv->lo < iv->hi)) return std::nullopt;
    return iv;
}

bool ray_hits_poly_interior(const Ray2& r, const ConvexPoly& q) {
    return ray_chord(q, r).has_value();
}

bool line_hits_poly_interior(const Line2Param& l, const ConvexPoly& q) {
    return chord_interval(q, l.origin, l.dir).has_value();
}

namespace {

bool separates(const ConvexPoly& a, const ConvexPoly& b) {
    int n = a.size();
    for (int i = 0; i < n; ++i) {
        bool all_out = true;
        for (const auto& w : b.v) {
            if (orient(a.v[i], a.v[(i + 1) % n], w) > 0) {
                all_out = false;
                break;
            }
        }
        if (all_out) return true;
    }
    return false;
}

}  // namespace

bool polys_interiors_intersect(const ConvexPoly& a, const ConvexPoly& b) {
    return !separates(a, b) && !separates(b, a);
}

ConvexPoly convex_hull(std::vector<Point2> points) {
    if (points.size() < 3) throw std::invalid_argument("convex_hull: need at least 3 points");
    std::sort(points.begin(), points.end(), [](const Point2& p, const Point2& q) {
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    int n = static_cast<int>(points.size());
    std::vector<Point2> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], points[i]) <= 0) --k;
        h[k++] = points[i];
    }
    for (int i = n - 2, t = k + 1; i >= 0; --i) {
        while (k >= t && orient(h[k - 2], h[k - 1], points[i]) <= 0) --k;
        h[k++] = points[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw std::invalid_argument("convex_hull: degenerate (collinear) input");
    return ConvexPoly{std::move(h)};
}

std::vector<Point2> clip_halfplane(const std::vector<Point2>& loop, const Line2& line, int sign) {
    std::vector<Point2> out;
    int n = static_cast<int>(loop.size());
    for (int i = 0; i < n; ++i) {
        const Point2& cur = loop[i];
        const Point2& nxt = loop[(i + 1) % n];
        int sc = line.side(cur) * sign;
        int sn = line.side(nxt) * sign;
        if (sc >= 0) out.push_back(cur);
        if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
            auto p = line_intersection(line, Line2::through(cur, nxt));
            out.push_back(*p);  // non-parallel by the strict sign change
        }
    }
    return out;
}

std::pair<std::optional<ConvexPoly>, std::optional<ConvexPoly>> split_poly(const ConvexPoly& q,
                                                                           const Line2& line) {
    bool pos = false, neg = false;
    for (const auto& p : q.v) {
        int s = line.side(p);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
    }
    if (!(pos && neg)) {
        // Line does not cross the interior.
        if (pos) return {std::nullopt, q};
        if (neg) return {q, std::nullopt};
        return {std::nullopt, std::nullopt};  // degenerate: all on the line
    }
    return {canonical_poly(clip_halfplane(q.v, line, -1)),
            canonical_poly(clip_halfplane(q.v, line, +1))};
}

Rat intersection_area(const ConvexPoly& a, const ConvexPoly& b) {
    std::vector<Point2> loop = a.v;
    int n = b.size();
    for (int i = 0; i < n && loop.size() >= 3; ++i) {
        loop = clip_halfplane(loop, Line2::through(b.v[i], b.v[(i + 1) % n]), +1);
    }
    if (loop.size() < 3) return Rat(0);
    Rat s(0);
    int m = static_cast<int>(loop.size());
    for (int i = 0; i < m; ++i) s += cross(loop[i], loop[(i + 1) % m]);
    return s / Rat(2);
}

TangentSpan tangent_span(const ConvexPoly& q, const Point2& y) {
    Dir2 lo = Dir2((q.v[0] - y).x, (q.v[0] - y).y);
    Dir2 hi = lo;
    for (int i = 1; i < q.size(); ++i) {
        Dir2 u((q.v[i] - y).x, (q.v[i] - y).y);
        if (sgn(cross(lo, u)) < 0) lo = u;
        if (sgn(cross(hi, u)) > 0) hi = u;
    }
    return {lo, hi};
}

Rat linf_point_segment(const Point2& p, const Point2& a, const Point2& b) {
    // Minimize max(|c1 + t d1|, |c2 + t d2|) over t in [0,1]: the optimum is
    // at an interval end, a zero of either coordinate, or a crossing of the
    // two absolute values.
    Rat c1 = a.x - p.x, d1 = b.x - a.x;
    Rat c2 = a.y - p.y, d2 = b.y - a.y;
    std::vector<Rat> ts = {Rat(0), Rat(1)};
    auto add_root = [&ts](const Rat& c, const Rat& d) {
        if (!d.is_zero()) ts.push_back(-c / d);
    };
    add_root(c1, d1);
    add_root(c2, d2);
    add_root(c1 - c2, d1 - d2);
    add_root(c1 + c2, d1 + d2);
    bool first = true;
    Rat best;
    for (const Rat& t : ts) {
        if (t.sign() < 0 || t > Rat(1)) continue;
        Rat f = max(abs(c1 + t * d1), abs(c2 + t * d2));
        if (first || f < best) {
            best = f;
            first = false;
        }
    }
    return best;
}

Rat linf_point_poly(const Point2& p, const ConvexPoly& q) {
    if (locate_point(q, p).loc != PointLoc::Outside) return Rat(0);
    Rat best;
    bool first = true;
    int n = q.size();
    for (int i = 0; i < n; ++i) {
        Rat d = linf_point_segment(p, q.v[i], q.v[(i + 1) % n]);
        if (first || d < best) {
            best = d;
            first = false;
        }
    }
    return best;
}

Rat linf_clearance(const Point2& p, const ConvexPoly& q) {
    Rat best;
    bool first = true;
    int n = q.size();
    for (int i = 0; i < n; ++i) {
        Rat d = linf_point_segment(p, q.v[i], q.v[(i + 1) % n]);
        if (first || d < best) {
            best = d;
            first = false;
        }
    }
    return best;
}

ConvexPoly make_square(const Point2& c, const Rat& r) {
    if (r.sign() <= 0) throw std::invalid_argument("make_square: half-side must be positive");
    return ConvexPoly{
        {{c.x - r, c.y - r}, {c.x + r, c.y - r}, {c.x + r, c.y + r}, {c.x - r, c.y + r}}};
}

bool open_square_in_poly(const Point2& c, const Rat& r, const ConvexPoly& q) {
    if (r.sign() <= 0) return false;
    Point2 corners[4] = {{c.x - r, c.y - r}, {c.x + r, c.y - r}, {c.x + r, c.y + r}, {c.x - r, c.y + r}};
    int n = q.size();
    for (int i = 0; i < n; ++i) {
        bool any_pos = false;
        for (const auto& w : corners) {
            int s = orient(q.v[i], q.v[(i + 1) % n], w);
            if (s < 0) return false;
            if (s > 0) any_pos = true;
        }
        if (!any_pos) return false;
    }
    return true;
}

}  // namespace semiconvex
