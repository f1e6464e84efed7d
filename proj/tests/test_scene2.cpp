#include <algorithm>

#include "doctest.h"
#include "semiconvex/rng.hpp"
#include "semiconvex/scene2.hpp"

using namespace semiconvex;

namespace {

Point2 pt(long x, long y) { return {Rat(x), Rat(y)}; }
Point2 ptq(long xn, long xd, long yn, long yd) { return {Rat(xn, xd), Rat(yn, yd)}; }

ConvexPoly square(long x0, long y0, long x1, long y1) {
    return make_poly({pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)});
}

}  // namespace

TEST_CASE("scene_contains open-union semantics") {
    Scene2 one = make_scene({square(0, 0, 1, 1)});
    CHECK(scene_contains(one, ptq(1, 2, 1, 2)) == SceneLoc::InE);

    // Two squares sharing the edge x=1: the shared edge is NOT in the union.
    Scene2 two = make_scene({square(0, 0, 1, 1), square(1, 0, 2, 1)});
    CHECK(scene_contains(two, ptq(1, 1, 1, 2)) == SceneLoc::OnBoundary);

    // A rhombus straddling x=1 glues the squares.
    ConvexPoly rhombus = make_poly({ptq(3, 4, 1, 2), ptq(1, 1, 1, 4), ptq(5, 4, 1, 2), ptq(1, 1, 3, 4)});
    Scene2 glued = make_scene({square(0, 0, 1, 1), square(1, 0, 2, 1), rhombus});
    CHECK(scene_contains(glued, ptq(1, 1, 1, 2)) == SceneLoc::InE);
    CHECK(scene_components(glued).size() == 1);
    CHECK(scene_components(two).size() == 2);
}

TEST_CASE("ray and line scene hits") {
    Scene2 s = make_scene({square(0, 0, 1, 1)});
    CHECK(ray_hits_scene(s, Ray2{ptq(1, 2, 1, 2), Dir2(1, 0)}));
    CHECK_FALSE(ray_hits_scene(s, Ray2{pt(5, 5), Dir2(1, 1)}));
    CHECK(line_hits_scene(s, Line2Param{pt(5, 5), Dir2(1, 1)}));
    CHECK_FALSE(line_hits_scene(s, Line2Param{pt(2, 0), Dir2(0, 1)}));

    // Monotone under adding polys.
    Rng rng(5);
    Scene2 bigger = make_scene({square(0, 0, 1, 1), square(3, 3, 4, 4)});
    for (int i = 0; i < 100; ++i) {
        Point2 o = rng.point_in_box(AABB{pt(-6, -6), pt(6, 6)});
        Rat dx = rng.uniform(Rat(-1), Rat(1)), dy = rng.uniform(Rat(-1), Rat(1));
        if (dx.is_zero() && dy.is_zero()) continue;
        Ray2 r{o, Dir2(dx, dy)};
        if (ray_hits_scene(s, r)) CHECK(ray_hits_scene(bigger, r));
    }
}

TEST_CASE("scene_components invariance") {
    std::vector<ConvexPoly> polys = {square(0, 0, 2, 2), square(1, 1, 3, 3), square(5, 5, 6, 6)};
    Scene2 s = make_scene(polys);
    CHECK(scene_components(s).size() == 2);
    std::reverse(polys.begin(), polys.end());
    CHECK(scene_components(make_scene(polys)).size() == 2);
    // Adding a poly contained in an existing one changes nothing.
    polys.push_back(square(5, 5, 6, 6));
    CHECK(scene_components(make_scene(polys)).size() == 2);
}

TEST_CASE("boundary fragments of a single square") {
    Scene2 s = make_scene({square(0, 0, 1, 1)});
    auto frags = scene_boundary_fragments(s);
    REQUIRE(frags.size() == 4);
    for (const auto& f : frags) {
        CHECK(f.t0 == Rat(0));
        CHECK(f.t1 == Rat(1));
    }
}

TEST_CASE("boundary fragments of overlapping squares") {
    Scene2 s = make_scene({square(0, 0, 2, 2), square(1, 1, 3, 3)});
    auto frags = scene_boundary_fragments(s);
    // Sampling oracle: every fragment point is on the union boundary, and
    // overlap-interior edge parts are absent.
    for (const auto& f : frags) {
        for (int i = 0; i <= 4; ++i) {
            Point2 p = f.a + Rat(i, 4) * (f.b - f.a);
            CHECK(scene_contains(s, p) == SceneLoc::OnBoundary);
        }
    }
    // The part of square-1's top edge inside square-2 must not appear.
    for (const auto& f : frags) {
        if (f.poly == 0 && f.edge == 2) {
            // top edge from (2,2) to (0,2): the open part x in (1,2) is interior to square 2
            CHECK(f.t0 >= Rat(1, 2));
        }
    }
    // A poly fully inside another contributes no fragments.
    Scene2 nested = make_scene({square(0, 0, 4, 4), square(1, 1, 2, 2)});
    for (const auto& f : scene_boundary_fragments(nested)) CHECK(f.poly == 0);
}

TEST_CASE("candidate lines") {
    Scene2 tri = make_scene({make_poly({pt(0, 0), pt(2, 0), pt(0, 2)})});
    CHECK(candidate_lines(tri).size() == 3);
    Scene2 sq = make_scene({square(0, 0, 1, 1)});
    CHECK(candidate_lines(sq).size() == 6);  // 4 edges + 2 diagonals
    // Two disjoint segments' endpoints in general position: C(4,2) = 6.
    Scene2 two = make_scene({make_poly({pt(0, 0), pt(1, 0), pt(0, 1)}),
                             make_poly({pt(10, 3), pt(11, 5), pt(9, 5)})});
    CHECK(candidate_lines(two).size() == 15);  // C(6,2) over 6 vertices, no coincidences
}
