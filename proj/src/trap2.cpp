#include "semiconvex/trap2.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

namespace semiconvex {

namespace {

Dir2 edge_dir(const Point2& a, const Point2& b) {
    Point2 d = b - a;
    return Dir2(d.x, d.y);
}

/// Open arc of directions in which a ray from y immediately enters the
/// interior of q. Pre: y in closure(q).
std::optional<Arc> boundary_entry_arc(const ConvexPoly& q, const LocateResult& at) {
    if (at.vertex >= 0) {
        int i = at.vertex;
        // Interior cone at a vertex: between the two emanating edges.
        return Arc{edge_dir(q.vertex(i), q.vertex(i + 1)), edge_dir(q.vertex(i), q.vertex(i - 1))};
    }
    if (at.edge >= 0) {
        Dir2 e = edge_dir(q.vertex(at.edge), q.vertex(at.edge + 1));
        return Arc{e, e.antipode()};  // half circle strictly left of the edge
    }
    return std::nullopt;
}

}  // namespace

ArcSet blocked_arcs(const Scene2& s, const Point2& y) {
    std::vector<Arc> raw;
    for (const auto& q : s.polys) {
        auto at = locate_point(q, y);
        if (at.loc == PointLoc::Interior) return ArcSet::full_circle();
        if (at.loc == PointLoc::Boundary) {
            raw.push_back(*boundary_entry_arc(q, at));
        } else {
            auto span = tangent_span(q, y);
            raw.push_back(Arc{span.lo, span.hi});
        }
    }
    return ArcSet::from_arcs(raw);
}

Classification classify_point(const Scene2& s, const Point2& y) {
    switch (scene_contains(s, y)) {
        case SceneLoc::InE: return {PointClass::InE, std::nullopt};
        case SceneLoc::OnBoundary: return {PointClass::OnBoundaryE, std::nullopt};
        case SceneLoc::Outside: break;
    }
    ArcSet blocked = blocked_arcs(s, y);
    if (blocked.is_full()) return {PointClass::TrappedBoth, std::nullopt};
    ArcSet sym = antipodal_symmetrize(blocked);
    if (sym.is_full()) {
        Dir2 d = *arcset_complement_representative(blocked);
        if (ray_hits_scene(s, Ray2{y, d}))
            throw std::logic_error("classify_point: escape-ray witness hits the scene");
        return {PointClass::TrappedLinesOnly, d};
    }
    Dir2 d = *arcset_complement_representative(sym);
    if (line_hits_scene(s, Line2Param{y, d}))
        throw std::logic_error("classify_point: escape-line witness hits the scene");
    return {PointClass::Free, d};
}

// ---------------------------------------------------------------- region

namespace {

CellLabel label_of(const Classification& c) {
    switch (c.status) {
        case PointClass::InE: return CellLabel::InE;
        case PointClass::TrappedBoth: return CellLabel::TrappedBoth;
        case PointClass::TrappedLinesOnly: return CellLabel::TrappedLinesOnly;
        default: return CellLabel::Free;
    }
}

ConvexPoly bbox_poly(const AABB& b) {
    return make_poly({{b.min.x, b.min.y}, {b.max.x, b.min.y}, {b.max.x, b.max.y}, {b.min.x, b.max.y}});
}

bool line_splits(const ConvexPoly& q, const Line2& l) {
    bool pos = false, neg = false;
    for (const auto& p : q.v) {
        int s = l.side(p);
        pos = pos || s > 0;
        neg = neg || s < 0;
        if (pos && neg) return true;
    }
    return false;
}

struct BspBuilder {
    const std::vector<Line2>& lines;
    std::vector<RegionCells::Node> nodes;
    std::vector<ConvexPoly> leaf_polys;

    int build(ConvexPoly cell, const std::vector<int>& active) {
        int id = static_cast<int>(nodes.size());
        nodes.emplace_back();
        if (active.empty()) {
            nodes[id].cell = static_cast<int>(leaf_polys.size());
            leaf_polys.push_back(std::move(cell));
            return id;
        }
        int li = active.front();
        auto [neg, pos] = split_poly(cell, lines[li]);
        if (!neg || !pos)
            throw std::logic_error("trap_region: active line failed to split its cell");
        std::vector<int> aneg, apos;
        for (size_t k = 1; k < active.size(); ++k) {
            if (neg && line_splits(*neg, lines[active[k]])) aneg.push_back(active[k]);
            if (pos && line_splits(*pos, lines[active[k]])) apos.push_back(active[k]);
        }
        nodes[id].line = li;
        int nchild = build(std::move(*neg), aneg);
        int pchild = build(std::move(*pos), apos);
        nodes[id].neg = nchild;
        nodes[id].pos = pchild;
        return id;
    }
};

void parallel_for(int n, const std::function<void(int)>& fn) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (hw == 1 || n < 64) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (unsigned t = 0; t < hw; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

RegionCells trap_region(const Scene2& s) {
    RegionCells rc;
    rc.bbox = s.bbox;
    rc.lines = candidate_lines(s);

    ConvexPoly root = bbox_poly(s.bbox);
    std::vector<int> active;
    for (int i = 0; i < static_cast<int>(rc.lines.size()); ++i) {
        if (line_splits(root, rc.lines[i])) active.push_back(i);
    }
    BspBuilder builder{rc.lines, {}, {}};
    builder.build(root, active);
    rc.nodes = std::move(builder.nodes);

    int n = static_cast<int>(builder.leaf_polys.size());
    rc.cells.resize(n);
    parallel_for(n, [&](int i) {
        ConvexPoly& cell = builder.leaf_polys[i];
        CellLabel lab = label_of(classify_point(s, poly_centroid(cell)));
        rc.cells[i] = RegionCell{std::move(cell), lab};
    });
    return rc;
}

int RegionCells::locate(const Point2& p) const {
    if (nodes.empty()) return -1;
    int id = 0;
    for (;;) {
        const Node& nd = nodes[id];
        if (nd.line < 0) {
            if (nd.cell >= 0 && locate_point(cells[nd.cell].cell, p).loc == PointLoc::Interior)
                return nd.cell;
            return -1;
        }
        int side = lines[nd.line].side(p);
        if (side == 0) return -1;  // on the skeleton
        id = side < 0 ? nd.neg : nd.pos;
    }
}

Rat RegionCells::label_area(CellLabel label) const {
    Rat total(0);
    for (const auto& c : cells) {
        if (c.label == label) total += poly_area(c.cell);
    }
    return total;
}

Rat region_symmetric_difference_area(const RegionCells& rc, const std::vector<CellLabel>& labels,
                                     const ConvexPoly& target) {
    auto selected = [&labels](CellLabel l) {
        return std::find(labels.begin(), labels.end(), l) != labels.end();
    };
    // Cells are interior-disjoint, so |cells \ P| + |P \ cells| expands to
    // sum(cell) + |P| - 2 * sum(cell ^ P).
    Rat cell_total(0), overlap(0);
    for (const auto& c : rc.cells) {
        if (!selected(c.label)) continue;
        cell_total += poly_area(c.cell);
        overlap += intersection_area(c.cell, target);
    }
    return cell_total + poly_area(target) - Rat(2) * overlap;
}

// ------------------------------------------------------ facets/components

namespace {

struct FacetEdge {
    Rat t0, t1;  // along-line parameter b*x - a*y, t0 < t1
    int cell;
};

/// Groups all cell edges by carrier line; the parameter b*x - a*y is a
/// division-free coordinate along the line.
std::map<Line2, std::vector<FacetEdge>> collect_edges(const RegionCells& rc,
                                                      const std::vector<int>& cell_ids) {
    std::map<Line2, std::vector<FacetEdge>> by_line;
    for (int ci : cell_ids) {
        const ConvexPoly& q = rc.cells[ci].cell;
        int m = q.size();
        for (int e = 0; e < m; ++e) {
            const Point2& a = q.v[e];
            const Point2& b = q.v[(e + 1) % m];
            Line2 ln = Line2::through(a, b);
            Rat ta = Rat(ln.b) * a.x - Rat(ln.a) * a.y;
            Rat tb = Rat(ln.b) * b.x - Rat(ln.a) * b.y;
            if (tb < ta) std::swap(ta, tb);
            by_line[ln].push_back(FacetEdge{ta, tb, ci});
        }
    }
    return by_line;
}

Point2 point_on_line_at(const Line2& ln, const Rat& t) {
    // Solve a*x + b*y = -c, b*x - a*y = t.
    Rat n = Rat(ln.a * ln.a + ln.b * ln.b);
    Rat x = (Rat(ln.b) * t - Rat(ln.a * ln.c)) / n;
    Rat y = (Rat(-ln.b * ln.c) - Rat(ln.a) * t) / n;
    return {x, y};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int i, int j) { parent[find(i)] = find(j); }
};

}  // namespace

std::vector<RegionComponent> region_components(const Scene2& s, const RegionCells& rc,
                                               const std::vector<CellLabel>& labels) {
    auto selected = [&labels](CellLabel l) {
        return std::find(labels.begin(), labels.end(), l) != labels.end();
    };
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(rc.cells.size()); ++i) {
        if (selected(rc.cells[i].label)) ids.push_back(i);
    }
    std::vector<int> slot(rc.cells.size(), -1);
    for (size_t k = 0; k < ids.size(); ++k) slot[ids[k]] = static_cast<int>(k);

    UnionFind uf(static_cast<int>(ids.size()));
    auto by_line = collect_edges(rc, ids);
    for (const auto& [line, edges] : by_line) {
        for (size_t i = 0; i < edges.size(); ++i) {
            for (size_t j = i + 1; j < edges.size(); ++j) {
                if (edges[i].cell == edges[j].cell) continue;
                Rat lo = max(edges[i].t0, edges[j].t0);
                Rat hi = min(edges[i].t1, edges[j].t1);
                if (!(lo < hi)) continue;  // need positive-length contact
                if (uf.find(slot[edges[i].cell]) == uf.find(slot[edges[j].cell])) continue;
                Point2 mid = point_on_line_at(line, (lo + hi) / Rat(2));
                if (selected(label_of(classify_point(s, mid))))
                    uf.unite(slot[edges[i].cell], slot[edges[j].cell]);
            }
        }
    }

    std::map<int, std::vector<int>> groups;
    for (size_t k = 0; k < ids.size(); ++k) groups[uf.find(static_cast<int>(k))].push_back(ids[k]);

    std::vector<RegionComponent> out;
    for (auto& [root, cells] : groups) {
        RegionComponent comp;
        comp.cells = cells;
        comp.area = Rat(0);
        std::vector<Point2> pts;
        for (int ci : cells) {
            comp.area += poly_area(rc.cells[ci].cell);
            pts.insert(pts.end(), rc.cells[ci].cell.v.begin(), rc.cells[ci].cell.v.end());
        }
        comp.hull = convex_hull(pts);
        comp.convex = poly_area(comp.hull) == comp.area;
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

bool is_trapped_label(CellLabel l, TrapMode mode) {
    if (mode == TrapMode::Ray) return l == CellLabel::TrappedBoth;
    return l == CellLabel::TrappedBoth || l == CellLabel::TrappedLinesOnly;
}

}  // namespace

std::vector<Point2> trapped_boundary_samples(const Scene2& s, const RegionCells& rc, TrapMode mode,
                                             int min_count) {
    (void)s;
    std::vector<int> ids(rc.cells.size());
    std::iota(ids.begin(), ids.end(), 0);
    auto by_line = collect_edges(rc, ids);

    struct Seg {
        Line2 line;
        Rat lo, hi;
    };
    std::vector<Seg> segs;
    for (const auto& [line, edges] : by_line) {
        for (size_t i = 0; i < edges.size(); ++i) {
            for (size_t j = i + 1; j < edges.size(); ++j) {
                bool ti = is_trapped_label(rc.cells[edges[i].cell].label, mode);
                bool tj = is_trapped_label(rc.cells[edges[j].cell].label, mode);
                if (ti == tj) continue;
                Rat lo = max(edges[i].t0, edges[j].t0);
                Rat hi = min(edges[i].t1, edges[j].t1);
                if (lo < hi) segs.push_back(Seg{line, lo, hi});
            }
        }
    }
    std::vector<Point2> samples;
    if (segs.empty()) return samples;
    // Bisect every separating facet until enough midpoints exist.
    while (static_cast<int>(segs.size()) < min_count) {
        std::vector<Seg> refined;
        refined.reserve(segs.size() * 2);
        for (const auto& g : segs) {
            Rat mid = (g.lo + g.hi) / Rat(2);
            refined.push_back(Seg{g.line, g.lo, mid});
            refined.push_back(Seg{g.line, mid, g.hi});
        }
        segs = std::move(refined);
    }
    samples.reserve(segs.size());
    for (const auto& g : segs) samples.push_back(point_on_line_at(g.line, (g.lo + g.hi) / Rat(2)));
    return samples;
}

// ------------------------------------------------------------- decisions

namespace {

DecisionResult boundary_escape_check(const Scene2& s, bool lines_mode) {
    auto escapes = [&](const Point2& x) {
        ArcSet b = blocked_arcs(s, x);
        if (lines_mode) b = antipodal_symmetrize(b);
        return !b.is_full();
    };
    auto frags = scene_boundary_fragments(s);
    auto lines = candidate_lines(s);
    for (const auto& f : frags) {
        if (f.t0 == f.t1) {
            if (!escapes(f.a)) return {false, f.a};
            continue;
        }
        const ConvexPoly& q = s.polys[f.poly];
        Point2 a = q.v[f.edge];
        Point2 vec = q.vertex(f.edge + 1) - a;
        std::vector<Rat> ts = {f.t0, f.t1};
        for (const auto& ln : lines) {
            Rat denom = Rat(ln.a) * vec.x + Rat(ln.b) * vec.y;
            if (denom.is_zero()) continue;  // parallel (or the carrier itself)
            Rat t = -ln.eval(a) / denom;
            if (f.t0 < t && t < f.t1) ts.push_back(t);
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (size_t i = 0; i < ts.size(); ++i) {
            Point2 x = a + ts[i] * vec;
            if (!escapes(x)) return {false, x};
            if (i + 1 < ts.size()) {
                Point2 m = a + ((ts[i] + ts[i + 1]) / Rat(2)) * vec;
                if (!escapes(m)) return {false, m};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace

DecisionResult weakly_semiconvex(const Scene2& s) { return boundary_escape_check(s, false); }
DecisionResult weakly_convex(const Scene2& s) { return boundary_escape_check(s, true); }

// ------------------------------------------------------------ certificate

namespace {

std::vector<Dir2> complement_gap_dirs(const ArcSet& a) {
    std::vector<Dir2> out;
    if (a.is_full()) return out;
    if (a.is_empty()) {
        out.emplace_back(1L, 0L);
        return out;
    }
    const auto& arcs = a.arcs();
    size_t n = arcs.size();
    for (size_t i = 0; i < n; ++i) {
        const Dir2& u = arcs[i].end;
        const Dir2& v = arcs[(i + 1) % n].start;
        if (u == v) {
            out.push_back(u);
        } else if (sgn(cross(u, v)) > 0) {
            out.emplace_back(Rat(u.dx + v.dx), Rat(u.dy + v.dy));
        } else {
            out.push_back(arc_interior_dir(u, v));
        }
    }
    return out;
}

/// First interior chord of the ray among all scene pieces; ties broken by
/// input order.
struct FirstChord {
    int poly;
    Interval iv;
};
std::optional<FirstChord> first_scene_chord(const Scene2& s, const Ray2& r) {
    std::optional<FirstChord> best;
    for (int i = 0; i < static_cast<int>(s.polys.size()); ++i) {
        auto iv = ray_chord(s.polys[i], r);
        if (iv && (!best || iv->lo < best->iv.lo)) best = FirstChord{i, *iv};
    }
    return best;
}

}  // namespace

Certificate certify_trap_radius(const Scene2& s, const Point2& y, TrapMode mode, int max_rounds) {
    auto cls = classify_point(s, y);
    if (mode == TrapMode::Ray && cls.status != PointClass::TrappedBoth)
        throw NotTrapped("certify_trap_radius: point is not trapped for rays");
    if (mode == TrapMode::Line && cls.status != PointClass::TrappedBoth &&
        cls.status != PointClass::TrappedLinesOnly)
        throw NotTrapped("certify_trap_radius: point is not trapped for lines");

    Rat eps1;
    bool first = true;
    for (const auto& q : s.polys) {
        Rat d = linf_point_poly(y, q);
        if (first || d < eps1) {
            eps1 = d;
            first = false;
        }
    }
    if (first || eps1.sign() <= 0)
        throw NotTrapped("certify_trap_radius: point lies in the closure of E");

    Certificate cert;
    cert.center = y;
    cert.epsilon1 = eps1;
    cert.mode = mode;

    // covered = union of the witness arcs, antipodally symmetrized in line
    // mode, so a full covered set is exactly the certificate's obligation.
    ArcSet covered;
    auto process = [&](const Dir2& d0) {
        Dir2 d = d0;
        auto chord = first_scene_chord(s, Ray2{y, d});
        if (!chord && mode == TrapMode::Line) {
            // The ray in d escapes but the line is blocked: walk the antipode.
            d = d0.antipode();
            chord = first_scene_chord(s, Ray2{y, d});
        }
        if (!chord) throw std::logic_error("certify_trap_radius: blocked direction with no chord");
        Point2 x = y + chord->iv.mid() * d.point();
        const ConvexPoly& q = s.polys[chord->poly];
        Rat half = linf_clearance(x, q) / Rat(2);
        auto span = tangent_span(make_square(x, half), y);
        WitnessSquare w{x, half, Arc{span.lo, span.hi}, chord->poly};
        covered = arcset_union(covered, ArcSet::single(w.covered));
        if (mode == TrapMode::Line)
            covered = arcset_union(
                covered, ArcSet::single(Arc{w.covered.start.antipode(), w.covered.end.antipode()}));
        cert.witnesses.push_back(std::move(w));
    };

    // Event directions (rays through scene vertices) come first: gap
    // midpoints otherwise accumulate toward them while the first chord
    // degenerates to a corner clip and the witness arcs shrink to nothing.
    for (const auto& q : s.polys) {
        for (const auto& w : q.v) {
            if (w == y) continue;
            Dir2 d((w - y).x, (w - y).y);
            if (!covered.contains(d)) process(d);
        }
    }

    unsigned density = 64;
    int round = 0;
    while (!covered.is_full()) {
        if (round++ >= max_rounds)
            throw std::runtime_error(
                "certify_trap_radius: refinement cap reached without full coverage");
        for (unsigned k = 0; k < density; ++k) {
            Dir2 d = circle_direction(k, density);
            if (!covered.contains(d)) process(d);
        }
        // Guarantee progress on gaps the lattice misses.
        for (const Dir2& d : complement_gap_dirs(covered)) {
            if (!covered.contains(d)) process(d);
        }
        density *= 2;
    }

    cert.epsilon = eps1;
    for (const auto& w : cert.witnesses) cert.epsilon = min(cert.epsilon, w.half_side);
    return cert;
}

bool certificate_valid(const Scene2& s, const Certificate& c) {
    if (c.epsilon.sign() <= 0 || c.epsilon > c.epsilon1) return false;
    std::vector<Arc> arcs;
    for (const auto& w : c.witnesses) {
        if (c.epsilon > w.half_side) return false;
        if (w.poly < 0 || w.poly >= static_cast<int>(s.polys.size())) return false;
        // The square fattened by epsilon must stay inside its scene piece.
        if (!open_square_in_poly(w.center, w.half_side + c.epsilon, s.polys[w.poly])) return false;
        auto span = tangent_span(make_square(w.center, w.half_side), c.center);
        if (!(span.lo == w.covered.start && span.hi == w.covered.end)) return false;
        arcs.push_back(w.covered);
    }
    ArcSet covered = ArcSet::from_arcs(arcs);
    if (c.mode == TrapMode::Line) covered = antipodal_symmetrize(covered);
    if (!covered.is_full()) return false;
    // epsilon1 really is the clearance from closure(E).
    Rat eps1;
    bool first = true;
    for (const auto& q : s.polys) {
        Rat d = linf_point_poly(c.center, q);
        if (first || d < eps1) {
            eps1 = d;
            first = false;
        }
    }
    return !first && eps1 == c.epsilon1;
}

// -------------------------------------------------------------- escapes

EscapeReport escape_ray_collection(const Scene2& s, const RegionCells& rc,
                                   const std::vector<Point2>& boundary_samples, TrapMode mode) {
    EscapeReport rep;
    for (const auto& x : boundary_samples) {
        ArcSet b = blocked_arcs(s, x);
        if (mode == TrapMode::Line) b = antipodal_symmetrize(b);
        if (b.is_full())
            throw std::logic_error(
                "escape_ray_collection: fully blocked boundary sample contradicts openness");
        Dir2 d = *arcset_complement_representative(b);
        rep.witnesses.push_back({x, d});
        bool miss_scene, miss_cells = true;
        if (mode == TrapMode::Ray) {
            miss_scene = !ray_hits_scene(s, Ray2{x, d});
            for (const auto& cell : rc.cells) {
                if (cell.label == CellLabel::TrappedBoth && ray_hits_poly_interior(Ray2{x, d}, cell.cell))
                    miss_cells = false;
            }
        } else {
            miss_scene = !line_hits_scene(s, Line2Param{x, d});
            for (const auto& cell : rc.cells) {
                if (is_trapped_label(cell.label, mode) &&
                    line_hits_poly_interior(Line2Param{x, d}, cell.cell))
                    miss_cells = false;
            }
        }
        rep.all_miss_scene = rep.all_miss_scene && miss_scene;
        rep.all_miss_trapped_cells = rep.all_miss_trapped_cells && miss_cells;
    }
    return rep;
}

}  // namespace semiconvex
