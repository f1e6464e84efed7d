#include "semiconvex/arcs.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiconvex {

ArcSet ArcSet::full_circle() {
    ArcSet s;
    s.full_ = true;
    return s;
}

bool ArcSet::contains(const Dir2& d) const {
    if (full_) return true;
    for (const auto& a : arcs_) {
        if (a.contains(d)) return true;
    }
    return false;
}

bool operator==(const ArcSet& a, const ArcSet& b) {
    if (a.full_ != b.full_) return false;
    if (a.arcs_.size() != b.arcs_.size()) return false;
    for (size_t i = 0; i < a.arcs_.size(); ++i) {
        if (!(a.arcs_[i].start == b.arcs_[i].start && a.arcs_[i].end == b.arcs_[i].end))
            return false;
    }
    return true;
}

ArcSet ArcSet::from_arcs(const std::vector<Arc>& raw) {
    if (raw.empty()) return ArcSet();

    // Event directions: every raw endpoint. Between consecutive events the
    // membership pattern is constant, so testing one interior direction per
    // elementary arc plus every event direction decides coverage exactly.
    std::vector<Dir2> ev;
    for (const auto& a : raw) {
        ev.push_back(a.start);
        ev.push_back(a.end);
    }
    std::sort(ev.begin(), ev.end(), [](const Dir2& u, const Dir2& v) { return dir_cmp(u, v) < 0; });
    ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
    int m = static_cast<int>(ev.size());

    auto in_raw = [&raw](const Dir2& d) {
        for (const auto& a : raw) {
            if (a.contains(d)) return true;
        }
        return false;
    };

    // Piece 2i = event point ev[i]; piece 2i+1 = open arc (ev[i], ev[i+1]).
    std::vector<bool> covered(2 * m);
    for (int i = 0; i < m; ++i) {
        covered[2 * i] = in_raw(ev[i]);
        covered[2 * i + 1] = in_raw(arc_interior_dir(ev[i], ev[(i + 1) % m]));
    }

    if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return full_circle();

    // Collect maximal covered runs; each is an open arc between two events.
    ArcSet out;
    int total = 2 * m;
    int anchor = 0;
    while (covered[anchor]) ++anchor;  // exists: not all covered
    int i = anchor;
    do {
        int j = (i + 1) % total;
        while (j != anchor && !covered[j]) j = (j + 1) % total;
        if (j == anchor) break;
        int k = j;
        while (covered[(k + 1) % total]) k = (k + 1) % total;
        // Runs start and end at arc pieces (a covered event forces its
        // neighbor arcs covered), so j and k are odd.
        out.arcs_.push_back(Arc{ev[j / 2], ev[((k / 2) + 1) % m]});
        i = (k + 1) % total;
    } while (i != anchor);
    return out;
}

ArcSet arcset_union(const ArcSet& a, const ArcSet& b) {
    if (a.is_full() || b.is_full()) return ArcSet::full_circle();
    std::vector<Arc> raw = a.arcs();
    raw.insert(raw.end(), b.arcs().begin(), b.arcs().end());
    return ArcSet::from_arcs(raw);
}

ArcSet antipodal_symmetrize(const ArcSet& a) {
    if (a.is_full()) return a;
    std::vector<Arc> raw = a.arcs();
    for (const auto& arc : a.arcs()) raw.push_back(Arc{arc.start.antipode(), arc.end.antipode()});
    return ArcSet::from_arcs(raw);
}

std::optional<Dir2> arcset_complement_representative(const ArcSet& a) {
    if (a.is_full()) return std::nullopt;
    static const long compass[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (const auto& c : compass) {
        Dir2 d(c[0], c[1]);
        if (!a.contains(d)) return d;
    }
    // Every complement component now has extent below pi (a closed arc of
    // extent >= pi would contain a compass direction).
    const auto& arcs = a.arcs();
    const Dir2& u = arcs.front().end;
    const Dir2& v = arcs[1 % arcs.size()].start;
    Dir2 rep = (u == v) ? u : Dir2(Rat(u.dx + v.dx), Rat(u.dy + v.dy));
    if (a.contains(rep)) throw std::logic_error("arcset_complement_representative: kernel bug");
    return rep;
}

}  // namespace semiconvex
