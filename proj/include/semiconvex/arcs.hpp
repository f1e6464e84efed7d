#pragma once

#include <optional>
#include <vector>

#include "semiconvex/geom2.hpp"

namespace semiconvex {

/// Open arc swept counterclockwise from start to end. start == end encodes
/// the full circle minus the single direction start (extent exactly 2*pi);
/// that value only ever appears inside normalized ArcSets.
struct Arc {
    Dir2 start, end;

    bool contains(const Dir2& d) const { return dir_in_open_arc(start, end, d); }
};

/// Normalized union of open arcs on the circle of directions: either the
/// full circle, or the maximal open connected components, pairwise disjoint,
/// cyclically sorted by start. Models the blocked-direction set B(y).
class ArcSet {
public:
    ArcSet() = default;

    static ArcSet empty_set() { return ArcSet(); }
    static ArcSet full_circle();
    static ArcSet single(const Arc& a) { return from_arcs({a}); }
    /// Normalizes an arbitrary collection of open arcs.
    static ArcSet from_arcs(const std::vector<Arc>& raw);

    bool is_full() const { return full_; }
    bool is_empty() const { return !full_ && arcs_.empty(); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool contains(const Dir2& d) const;

    friend bool operator==(const ArcSet& a, const ArcSet& b);

private:
    bool full_ = false;
    std::vector<Arc> arcs_;
};

ArcSet arcset_union(const ArcSet& a, const ArcSet& b);
inline bool arcset_is_full(const ArcSet& a) { return a.is_full(); }

/// a united with its pointwise antipode; idempotent.
ArcSet antipodal_symmetrize(const ArcSet& a);

/// A direction provably outside a (exact membership), if any. Prefers the
/// eight axis/diagonal directions; otherwise picks from the first complement
/// component (the component's single direction, or the endpoint sum of a
/// closed complement arc of extent below pi).
std::optional<Dir2> arcset_complement_representative(const ArcSet& a);

}  // namespace semiconvex
