#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "semiconvex/arcs.hpp"
#include "semiconvex/scene2.hpp"

namespace semiconvex {

/// Point status relative to the open set E. A point of the complement is
/// trapped for rays (every ray from it meets E), trapped for lines only
/// (every line meets E but some ray escapes), or free (some line misses E).
enum class PointClass { InE, OnBoundaryE, TrappedBoth, TrappedLinesOnly, Free };

struct Classification {
    PointClass status = PointClass::Free;
    /// Escape-ray direction for TrappedLinesOnly, escape-line direction for
    /// Free; verified exactly against the scene before being returned.
    std::optional<Dir2> witness;
};

/// B(y): the union over scene pieces of the open arcs of directions whose
/// ray from y enters the piece's interior.
ArcSet blocked_arcs(const Scene2& s, const Point2& y);

Classification classify_point(const Scene2& s, const Point2& y);

enum class TrapMode { Ray, Line };

// ---------------------------------------------------------------- region

enum class CellLabel { InE, TrappedBoth, TrappedLinesOnly, Free };

struct RegionCell {
    ConvexPoly cell;
    CellLabel label;
};

/// Open convex cells partitioning the scene bbox minus the candidate-line
/// skeleton, each label-constant (tested proof obligation). Keeps the BSP
/// for exact point location.
struct RegionCells {
    std::vector<RegionCell> cells;
    AABB bbox;

    struct Node {
        int line = -1;          // index into lines; -1 for leaves
        int neg = -1, pos = -1; // children
        int cell = -1;          // leaf: cell index
    };
    std::vector<Line2> lines;
    std::vector<Node> nodes;

    /// Index of the cell strictly containing p; -1 on the skeleton or
    /// outside the bbox.
    int locate(const Point2& p) const;

    Rat label_area(CellLabel label) const;
};

RegionCells trap_region(const Scene2& s);

/// Exact area of the symmetric difference between the union of cells with
/// the given labels and a convex polygon.
Rat region_symmetric_difference_area(const RegionCells& rc, const std::vector<CellLabel>& labels,
                                     const ConvexPoly& target);

struct RegionComponent {
    std::vector<int> cells;  // indices into rc.cells
    Rat area;                // exact sum of cell areas
    ConvexPoly hull;
    bool convex;             // exact equality area(hull) == area
};

/// Connected components of the sub-region with the given labels. Two cells
/// are adjacent when they share a positive-length facet whose midpoint
/// classifies into the selected label set.
std::vector<RegionComponent> region_components(const Scene2& s, const RegionCells& rc,
                                               const std::vector<CellLabel>& labels);

/// Midpoints of cell facets separating trapped from non-trapped (per mode),
/// facet-bisected until at least min_count samples exist (if any separating
/// facet exists at all).
std::vector<Point2> trapped_boundary_samples(const Scene2& s, const RegionCells& rc, TrapMode mode,
                                             int min_count);

// ------------------------------------------------------------- decisions

struct DecisionResult {
    bool ok = false;
    std::optional<Point2> counterexample;
};

/// Every boundary point of E admits an escape ray (resp. line): fragments
/// are subdivided at candidate lines and endpoints plus midpoints tested.
DecisionResult weakly_semiconvex(const Scene2& s);
DecisionResult weakly_convex(const Scene2& s);

// ------------------------------------------------------------ certificate

struct WitnessSquare {
    Point2 center;
    Rat half_side;
    Arc covered;  // open arc of directions from the certificate center
    int poly = -1;
};

/// Constructive openness certificate: finitely many open axis-aligned
/// squares inside E whose direction arcs from y cover the full circle
/// (antipodally symmetrized in line mode), with radius
/// epsilon = min(epsilon1, min half_side).
struct Certificate {
    Point2 center;
    Rat epsilon;
    Rat epsilon1;
    TrapMode mode;
    std::vector<WitnessSquare> witnesses;
};

struct NotTrapped : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Certificate certify_trap_radius(const Scene2& s, const Point2& y, TrapMode mode,
                                int max_rounds = 64);

/// Re-checks every certificate invariant exactly.
bool certificate_valid(const Scene2& s, const Certificate& c);

// -------------------------------------------------------------- escapes

struct EscapeReport {
    struct Entry {
        Point2 origin;
        Dir2 dir;
    };
    std::vector<Entry> witnesses;
    bool all_miss_scene = true;
    bool all_miss_trapped_cells = true;
};

/// One escape ray (line in line mode) per boundary sample, each verified to
/// miss E exactly and to miss every trapped cell exactly.
EscapeReport escape_ray_collection(const Scene2& s, const RegionCells& rc,
                                   const std::vector<Point2>& boundary_samples, TrapMode mode);

}  // namespace semiconvex
