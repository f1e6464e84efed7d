#include <map>
#include <set>

#include "doctest.h"
#include "semiconvex/construct2.hpp"
#include "semiconvex/rng.hpp"

using namespace semiconvex;

namespace {

Point2 pt(long x, long y) { return {Rat(x), Rat(y)}; }

/// Grid flood-fill component count for a cut scene. Two adjacent grid points
/// connect only if every strict side-line crossing between them is itself in
/// E, so cuts of measure zero still separate.
int flood_fill_components(const CutScene& cs, long denom) {
    AABB box = poly_bbox(cs.spec.outer);
    std::map<std::pair<long, long>, int> id;
    std::vector<Point2> pts;
    long span = 8 * denom;  // box is the +-4 square
    for (long i = 0; i <= span; ++i) {
        for (long j = 0; j <= span; ++j) {
            Point2 p{box.min.x + Rat(i, denom), box.min.y + Rat(j, denom)};
            if (scene_contains(cs.scene, p) == SceneLoc::InE) {
                id[{i, j}] = static_cast<int>(pts.size());
                pts.push_back(p);
            }
        }
    }
    std::vector<int> parent(pts.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    auto connected = [&](const Point2& p, const Point2& q) {
        for (const auto& ln : cs.side_lines) {
            int sp = ln.side(p), sq = ln.side(q);
            if (sp * sq < 0) {
                // strict crossing: the crossing point must itself be in E
                Rat t = -ln.eval(p) / (ln.eval(q) - ln.eval(p));
                Point2 x = p + t * (q - p);
                if (scene_contains(cs.scene, x) != SceneLoc::InE) return false;
            }
        }
        return true;
    };
    for (const auto& [key, i] : id) {
        auto [a, b] = key;
        for (auto [da, db] : {std::pair<long, long>{1, 0}, {0, 1}}) {
            auto it = id.find({a + da, b + db});
            if (it == id.end()) continue;
            if (connected(pts[i], pts[it->second])) parent[find(i)] = find(it->second);
        }
    }
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("paper scene, lines mode: 6 components (flood-fill cross-check)") {
    CutScene cs = make_cut_scene_2d(paper_e2_spec(CutMode::Lines));
    auto comps = scene_components(cs.scene);
    CHECK(comps.size() == 6);
    CHECK(flood_fill_components(cs, 4) == 6);
}

TEST_CASE("paper scene, rays mode: 3 components (flood-fill cross-check)") {
    CutScene cs = make_cut_scene_2d(paper_e2_spec(CutMode::Rays));
    auto comps = scene_components(cs.scene);
    CHECK(comps.size() == 3);
    CHECK(flood_fill_components(cs, 4) == 3);
}

TEST_CASE("cut scene membership matches the formula oracle") {
    for (CutMode mode : {CutMode::Rays, CutMode::Lines, CutMode::None}) {
        CutSceneSpec spec = paper_e2_spec(mode);
        spec.seed = 7;
        CutScene cs = make_cut_scene_2d(spec);  // self-validates on 2000 points
        Rng rng(1234);
        for (int i = 0; i < 300; ++i) {
            Point2 p = rng.point_in_box(poly_bbox(spec.outer));
            CHECK((scene_contains(cs.scene, p) == SceneLoc::InE) == cut_scene_membership(spec, p));
        }
    }
}

TEST_CASE("P not strictly inside D is rejected") {
    CutSceneSpec spec = paper_e2_spec(CutMode::Lines);
    spec.inner = make_poly({pt(0, 2), pt(-4, -1), pt(2, -1)});  // touches the boundary of D
    CHECK_THROWS_AS(make_cut_scene_2d(spec), std::invalid_argument);
}

TEST_CASE("generalized polygon family") {
    ConvexPoly quad = make_generalized_polygon(1);
    CHECK(quad.size() == 4);
    ConvexPoly oct = make_generalized_polygon(3);
    CHECK(oct.size() == 8);
    CHECK(is_strictly_convex_ccw(oct.v));
    Rat prev(0);
    for (int k = 1; k <= 6; ++k) {
        Rat a = poly_area(make_generalized_polygon(k));
        CHECK(a > prev);
        prev = a;
    }
}
