#pragma once

#include <cstdint>

#include "semiconvex/scene2.hpp"
#include "semiconvex/trap2.hpp"

namespace semiconvex {

/// What gets removed along the side lines of P: outward rays containing the
/// sides (one per side, cyclic orientation), the full lines, or nothing
/// (the no-cut negative control D minus closure(P)).
enum class CutMode { Rays, Lines, None };

struct CutSceneSpec {
    ConvexPoly outer;  // D: open bounded convex polygon
    ConvexPoly inner;  // P: open convex polygon, closure strictly inside D
    CutMode mode = CutMode::Lines;
    Rat glue_thinness = Rat(1, 8);  // initial apex offset, halved until exact containment
    uint64_t seed = 42;             // for the generator's self-validation sampling
};

struct CutScene {
    Scene2 scene;
    ConvexPoly predicted_trap;      // = inner
    std::vector<Ray2> removed_rays;
    std::vector<Line2> side_lines;
    CutSceneSpec spec;
};

/// Overlapping convex cover of (D \ closure(P)) minus the cuts: BSP chunks
/// plus thin glue triangles over every non-removed open side-line segment.
/// Self-validates against the direct set-formula membership on 2000 seeded
/// random points before returning.
CutScene make_cut_scene_2d(const CutSceneSpec& spec);

/// Direct membership oracle of the set formula (in D, not in closure(P),
/// not on a removed ray/line). Independent of the cover construction.
bool cut_scene_membership(const CutSceneSpec& spec, const Point2& pt);

/// D = square(+-4), P = triangle (0,2), (-2,-1), (2,-1).
CutSceneSpec paper_e2_spec(CutMode mode);

/// Finite truncation of the generalized polygon family: convex hull of
/// 2k+2 rational circle points accumulating at (1,0) from both sides.
ConvexPoly make_generalized_polygon(int k);

}  // namespace semiconvex
