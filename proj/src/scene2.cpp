#include "semiconvex/scene2.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace semiconvex {

Scene2 make_scene(std::vector<ConvexPoly> polys) {
    Scene2 s;
    if (polys.empty()) {
        s.bbox = AABB{{Rat(-1), Rat(-1)}, {Rat(1), Rat(1)}};
        return s;
    }
    for (const auto& p : polys) {
        if (!is_strictly_convex_ccw(p.v)) throw std::invalid_argument("make_scene: invalid polygon");
    }
    AABB box = poly_bbox(polys[0]);
    for (const auto& p : polys) {
        AABB b = poly_bbox(p);
        box.min.x = min(box.min.x, b.min.x);
        box.min.y = min(box.min.y, b.min.y);
        box.max.x = max(box.max.x, b.max.x);
        box.max.y = max(box.max.y, b.max.y);
    }
    Rat q(1, 4);
    Rat mx = max(Rat(1), (box.max.x - box.min.x)) * q;
    Rat my = max(Rat(1), (box.max.y - box.min.y)) * q;
    s.bbox = AABB{{box.min.x - mx, box.min.y - my}, {box.max.x + mx, box.max.y + my}};
    s.polys = std::move(polys);
    return s;
}

SceneLoc scene_contains(const Scene2& s, const Point2& p) {
    bool boundary = false;
    for (const auto& q : s.polys) {
        auto loc = locate_point(q, p).loc;
        if (loc == PointLoc::Interior) return SceneLoc::InE;
        if (loc == PointLoc::Boundary) boundary = true;
    }
    return boundary ? SceneLoc::OnBoundary : SceneLoc::Outside;
}

bool ray_hits_scene(const Scene2& s, const Ray2& r) {
    for (const auto& q : s.polys) {
        if (ray_hits_poly_interior(r, q)) return true;
    }
    return false;
}

bool line_hits_scene(const Scene2& s, const Line2Param& l) {
    for (const auto& q : s.polys) {
        if (line_hits_poly_interior(l, q)) return true;
    }
    return false;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int i, int j) { parent[find(i)] = find(j); }
};

}  // namespace

std::vector<std::vector<int>> scene_components(const Scene2& s) {
    int n = static_cast<int>(s.polys.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (uf.find(i) != uf.find(j) && polys_interiors_intersect(s.polys[i], s.polys[j]))
                uf.unite(i, j);
        }
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> root_slot(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (root_slot[r] < 0) {
            root_slot[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[root_slot[r]].push_back(i);
    }
    return comps;
}

std::vector<BoundaryFragment> scene_boundary_fragments(const Scene2& s) {
    std::vector<BoundaryFragment> out;
    int n = static_cast<int>(s.polys.size());
    for (int i = 0; i < n; ++i) {
        const ConvexPoly& q = s.polys[i];
        int m = q.size();
        for (int e = 0; e < m; ++e) {
            const Point2& a = q.v[e];
            const Point2& b = q.v[(e + 1) % m];
            Point2 vec = b - a;
            // Open parameter intervals where the edge runs through another
            // poly's interior; subtracting them from [0,1] leaves the closed
            // subsegments (and isolated points) on the union boundary.
            std::vector<Interval> cover;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                auto iv = chord_interval_vec(s.polys[j], a, vec);
                if (!iv) continue;
                if (iv->hi <= Rat(0) || iv->lo >= Rat(1)) continue;
                cover.push_back(*iv);  // keep unclipped so open endpoints stay exact
            }
            std::sort(cover.begin(), cover.end(),
                      [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
            auto emit = [&](const Rat& t0, const Rat& t1) {
                BoundaryFragment f;
                f.poly = i;
                f.edge = e;
                f.t0 = t0;
                f.t1 = t1;
                f.a = a + t0 * vec;
                f.b = a + t1 * vec;
                out.push_back(std::move(f));
            };
            Rat cur(0);
            bool done = false;
            for (const auto& iv : cover) {
                if (iv.hi <= cur) continue;
                if (iv.lo >= cur) emit(cur, iv.lo);
                cur = iv.hi;
                if (cur > Rat(1)) {
                    done = true;
                    break;
                }
            }
            if (!done) emit(cur, Rat(1));
        }
    }
    return out;
}

std::vector<Line2> candidate_lines(const Scene2& s) {
    std::vector<Point2> verts;
    for (const auto& q : s.polys) verts.insert(verts.end(), q.v.begin(), q.v.end());
    std::sort(verts.begin(), verts.end(), [](const Point2& p, const Point2& q) {
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
    });
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::set<Line2> lines;
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            lines.insert(Line2::through(verts[i], verts[j]));
        }
    }
    return {lines.begin(), lines.end()};
}

}  // namespace semiconvex
