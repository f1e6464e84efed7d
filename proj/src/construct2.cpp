#include "semiconvex/construct2.hpp"

#include <algorithm>
#include <stdexcept>

#include "semiconvex/rng.hpp"

namespace semiconvex {

namespace {

/// Signed parameter of a point known to be collinear with the carrier
/// (origin + t * vec); exact, division only by a nonzero coordinate.
Rat collinear_param(const Point2& origin, const Point2& vec, const Point2& p) {
    if (!vec.x.is_zero()) return (p.x - origin.x) / vec.x;
    return (p.y - origin.y) / vec.y;
}

struct GlueJob {
    Point2 a, b;  // open segment of a side line to cover
};

}  // namespace

bool cut_scene_membership(const CutSceneSpec& spec, const Point2& pt) {
    if (locate_point(spec.outer, pt).loc != PointLoc::Interior) return false;
    if (locate_point(spec.inner, pt).loc != PointLoc::Outside) return false;
    if (spec.mode == CutMode::None) return true;
    int n = spec.inner.size();
    for (int k = 0; k < n; ++k) {
        const Point2& pk = spec.inner.v[k];
        Point2 vec = spec.inner.vertex(k + 1) - pk;
        if (orient(pk, pk + vec, pt) != 0) continue;
        if (spec.mode == CutMode::Lines) return false;
        // Rays mode: removed iff on the ray from pk through the side.
        if (collinear_param(pk, vec, pt).sign() >= 0) return false;
    }
    return true;
}

CutSceneSpec paper_e2_spec(CutMode mode) {
    CutSceneSpec spec;
    spec.outer = make_poly({{Rat(-4), Rat(-4)}, {Rat(4), Rat(-4)}, {Rat(4), Rat(4)}, {Rat(-4), Rat(4)}});
    spec.inner = make_poly({{Rat(0), Rat(2)}, {Rat(-2), Rat(-1)}, {Rat(2), Rat(-1)}});
    spec.mode = mode;
    return spec;
}

CutScene make_cut_scene_2d(const CutSceneSpec& spec) {
    if (!is_strictly_convex_ccw(spec.outer.v) || !is_strictly_convex_ccw(spec.inner.v))
        throw std::invalid_argument("make_cut_scene_2d: invalid polygon");
    for (const auto& v : spec.inner.v) {
        if (locate_point(spec.outer, v).loc != PointLoc::Interior)
            throw std::invalid_argument("make_cut_scene_2d: closure(P) must lie strictly inside D");
    }

    CutScene out;
    out.spec = spec;
    out.predicted_trap = spec.inner;

    int m = spec.inner.size();
    for (int k = 0; k < m; ++k) {
        out.side_lines.push_back(Line2::through(spec.inner.v[k], spec.inner.vertex(k + 1)));
        if (spec.mode == CutMode::Rays) {
            Point2 vec = spec.inner.vertex(k + 1) - spec.inner.v[k];
            out.removed_rays.push_back(Ray2{spec.inner.v[k], Dir2(vec.x, vec.y)});
        }
    }

    // Chunks: split D by every side line, drop the cell that is P itself.
    std::vector<ConvexPoly> chunks = {spec.outer};
    for (const auto& ln : out.side_lines) {
        std::vector<ConvexPoly> next;
        for (const auto& q : chunks) {
            auto [neg, pos] = split_poly(q, ln);
            if (neg) next.push_back(std::move(*neg));
            if (pos) next.push_back(std::move(*pos));
        }
        chunks = std::move(next);
    }
    std::vector<ConvexPoly> polys;
    for (auto& q : chunks) {
        if (locate_point(spec.inner, poly_centroid(q)).loc != PointLoc::Interior)
            polys.push_back(std::move(q));
    }

    // Glue: in rays/none mode, every open side-line segment that stays in E
    // must be covered by overlapping thin triangles.
    if (spec.mode != CutMode::Lines) {
        std::vector<GlueJob> jobs;
        for (int k = 0; k < m; ++k) {
            const Point2& pk = spec.inner.v[k];
            Point2 vec = spec.inner.vertex(k + 1) - pk;
            auto chord = chord_interval_vec(spec.outer, pk, vec);
            if (!chord) throw std::logic_error("make_cut_scene_2d: side line misses D");
            // Side parameters: [0,1] is the side itself (in closure(P)); in
            // rays mode [0, inf) is removed; in none mode only [0,1] is.
            std::vector<Interval> segs;
            if (spec.mode == CutMode::Rays) {
                if (chord->lo < Rat(0)) segs.push_back(Interval{chord->lo, Rat(0)});
            } else {
                if (chord->lo < Rat(0)) segs.push_back(Interval{chord->lo, Rat(0)});
                if (chord->hi > Rat(1)) segs.push_back(Interval{Rat(1), chord->hi});
            }
            // Split at crossings with removed rays.
            for (const auto& r : out.removed_rays) {
                Line2 carrier = out.side_lines[k];
                Line2 other = Line2::from_point_dir(r.origin, r.dir);
                if (other == carrier) continue;
                auto x = line_intersection(carrier, other);
                if (!x) continue;
                if (collinear_param(r.origin, r.dir.point(), *x).sign() < 0) continue;  // not on the ray
                Rat t = collinear_param(pk, vec, *x);
                std::vector<Interval> split;
                for (const auto& g : segs) {
                    if (g.lo < t && t < g.hi) {
                        split.push_back(Interval{g.lo, t});
                        split.push_back(Interval{t, g.hi});
                    } else {
                        split.push_back(g);
                    }
                }
                segs = std::move(split);
            }
            for (const auto& g : segs) jobs.push_back(GlueJob{pk + g.lo * vec, pk + g.hi * vec});
        }

        for (const auto& job : jobs) {
            Point2 u = job.b - job.a;
            Point2 perp{-u.y, u.x};
            Rat third(1, 3);
            Point2 mA = job.a + (Rat(2) * third) * u;  // apex at a reaches 2/3 along
            Point2 mB = job.a + third * u;             // apex at b reaches back to 1/3
            Rat delta = spec.glue_thinness;
            const int kFloor = 64;
            int halvings = 0;
            for (;; ++halvings) {
                if (halvings > kFloor)
                    throw std::runtime_error("make_cut_scene_2d: glue thinness floor reached");
                Point2 w = delta * perp;
                ConvexPoly ta = make_poly({job.a, mA - w, mA + w});
                ConvexPoly tb = make_poly({mB - w, job.b, mB + w});
                auto contained = [&](const ConvexPoly& t) {
                    for (const auto& v : t.v) {
                        if (locate_point(spec.outer, v).loc == PointLoc::Outside) return false;
                    }
                    if (polys_interiors_intersect(t, spec.inner)) return false;
                    for (const auto& r : out.removed_rays) {
                        if (ray_hits_poly_interior(r, t)) return false;
                    }
                    return true;
                };
                if (contained(ta) && contained(tb)) {
                    polys.push_back(std::move(ta));
                    polys.push_back(std::move(tb));
                    break;
                }
                delta /= Rat(2);
            }
        }
    }

    out.scene = make_scene(std::move(polys));

    // Cover validation: the emitted union must match the set formula.
    Rng rng(spec.seed);
    AABB box = poly_bbox(spec.outer);
    for (int i = 0; i < 2000; ++i) {
        Point2 pt = rng.point_in_box(box);
        bool direct = cut_scene_membership(spec, pt);
        bool cover = scene_contains(out.scene, pt) == SceneLoc::InE;
        if (direct != cover)
            throw std::logic_error("make_cut_scene_2d: cover disagrees with the set formula");
    }
    return out;
}

ConvexPoly make_generalized_polygon(int k) {
    if (k < 1) throw std::invalid_argument("make_generalized_polygon: k must be at least 1");
    std::vector<Point2> pts = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}};
    Rat t(1);
    for (int j = 1; j <= k; ++j) {
        Rat d = Rat(1) + t * t;
        Rat x = (Rat(1) - t * t) / d;
        Rat y = Rat(2) * t / d;
        pts.push_back({x, y});
        pts.push_back({x, -y});
        t /= Rat(2);
    }
    return convex_hull(pts);
}

}  // namespace semiconvex
