#pragma once

#include <vector>

#include "semiconvex/poly2.hpp"

namespace semiconvex {

enum class SceneLoc { InE, OnBoundary, Outside };

/// The open set E as a finite union of open convex polygons. Overlaps are
/// allowed (and required to glue non-convex components: two open pieces
/// touching only along an edge do NOT connect).
struct Scene2 {
    std::vector<ConvexPoly> polys;
    AABB bbox;  // all vertices plus a 25% margin per side

    bool empty() const { return polys.empty(); }
};

Scene2 make_scene(std::vector<ConvexPoly> polys);

SceneLoc scene_contains(const Scene2& s, const Point2& p);

bool ray_hits_scene(const Scene2& s, const Ray2& r);
bool line_hits_scene(const Scene2& s, const Line2Param& l);

/// Connected components of the open union: transitive closure of pairwise
/// open-interior overlap. Each component is a list of poly indices.
std::vector<std::vector<int>> scene_components(const Scene2& s);

/// Closed piece of a poly edge that lies on the boundary of the union
/// (covered by no other poly's interior). t parametrizes the carrier edge;
/// t0 == t1 is an isolated boundary point.
struct BoundaryFragment {
    int poly = 0, edge = 0;
    Rat t0, t1;
    Point2 a, b;
};

std::vector<BoundaryFragment> scene_boundary_fragments(const Scene2& s);

/// All lines through pairs of distinct scene vertices (edge-supporting lines
/// included), deduplicated and in canonical sorted order. These are the
/// critical lines across which blocked-arc combinatorics can change.
std::vector<Line2> candidate_lines(const Scene2& s);

}  // namespace semiconvex
