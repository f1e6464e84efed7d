#include <algorithm>

#include "doctest.h"
#include "semiconvex/arcs.hpp"
#include "semiconvex/rng.hpp"

using namespace semiconvex;

namespace {

constexpr unsigned kGrid = 360;

Dir2 gd(unsigned i) { return circle_direction(i % kGrid, kGrid); }

Arc grid_arc(unsigned i, unsigned j) { return Arc{gd(i), gd(j)}; }

/// Index-arithmetic membership oracle for an arc built on grid directions.
bool oracle_in(unsigned i, unsigned j, unsigned m) {
    unsigned len = (j + kGrid - i) % kGrid;
    unsigned off = (m + kGrid - i) % kGrid;
    return off > 0 && off < len;
}

}  // namespace

TEST_CASE("half circles leave both shared endpoints uncovered") {
    ArcSet a = arcset_union(ArcSet::single(Arc{Dir2(1, 0), Dir2(-1, 0)}),
                            ArcSet::single(Arc{Dir2(-1, 0), Dir2(1, 0)}));
    CHECK_FALSE(a.is_full());
    CHECK(a.arcs().size() == 2);
    CHECK_FALSE(a.contains(Dir2(1, 0)));
    CHECK_FALSE(a.contains(Dir2(-1, 0)));
    CHECK(a.contains(Dir2(0, 1)));
    CHECK(a.contains(Dir2(0, -1)));
}

TEST_CASE("three overlapping half circles leave a single puncture") {
    ArcSet a = ArcSet::from_arcs({Arc{Dir2(1, 0), Dir2(-1, 0)}, Arc{Dir2(0, 1), Dir2(0, -1)},
                                  Arc{Dir2(-1, 0), Dir2(1, 0)}});
    CHECK_FALSE(a.is_full());
    REQUIRE(a.arcs().size() == 1);
    CHECK(a.arcs()[0].start == Dir2(1, 0));
    CHECK(a.arcs()[0].end == Dir2(1, 0));  // punctured full circle
    CHECK_FALSE(a.contains(Dir2(1, 0)));
    CHECK(a.contains(Dir2(1, 1)));
    auto rep = arcset_complement_representative(a);
    REQUIRE(rep.has_value());
    CHECK(*rep == Dir2(1, 0));
    // Adding any arc that covers the puncture completes the circle.
    ArcSet b = arcset_union(a, ArcSet::single(Arc{Dir2(1, -1), Dir2(1, 1)}));
    CHECK(b.is_full());
}

TEST_CASE("arcset_is_full basics") {
    CHECK(ArcSet::full_circle().is_full());
    CHECK_FALSE(ArcSet().is_full());
    ArcSet nearly = ArcSet::single(Arc{Dir2(1, 0), Dir2(1, 0)});
    CHECK_FALSE(nearly.is_full());
}

TEST_CASE("antipodal_symmetrize") {
    ArcSet upper = ArcSet::single(Arc{Dir2(1, 0), Dir2(-1, 0)});
    ArcSet sym = antipodal_symmetrize(upper);
    CHECK_FALSE(sym.is_full());
    CHECK_FALSE(sym.contains(Dir2(1, 0)));
    CHECK_FALSE(sym.contains(Dir2(-1, 0)));
    CHECK(sym.contains(Dir2(0, -1)));
    CHECK(antipodal_symmetrize(ArcSet::full_circle()).is_full());
    ArcSet quarter = ArcSet::single(Arc{Dir2(1, 0), Dir2(0, 1)});
    ArcSet qsym = antipodal_symmetrize(quarter);
    CHECK(qsym.arcs().size() == 2);
    CHECK(qsym.contains(Dir2(-1, -1)));
    CHECK(qsym == antipodal_symmetrize(qsym));  // idempotent
}

TEST_CASE("complement representative is provably outside") {
    CHECK(arcset_complement_representative(ArcSet::full_circle()) == std::nullopt);
    auto rep_empty = arcset_complement_representative(ArcSet());
    REQUIRE(rep_empty.has_value());
    CHECK(*rep_empty == Dir2(1, 0));
    ArcSet upper = ArcSet::single(Arc{Dir2(1, 0), Dir2(-1, 0)});
    auto rep = arcset_complement_representative(upper);
    REQUIRE(rep.has_value());
    CHECK_FALSE(upper.contains(*rep));
    CHECK(sgn(rep->dy) <= 0);
}

TEST_CASE("random grid arcs agree with the index oracle") {
    Rng rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        int count = 1 + static_cast<int>(rng.next() % 6);
        std::vector<Arc> arcs;
        std::vector<std::pair<unsigned, unsigned>> idx;
        for (int a = 0; a < count; ++a) {
            unsigned i = rng.next() % kGrid;
            unsigned j = rng.next() % kGrid;
            if (i == j) j = (j + 1) % kGrid;
            arcs.push_back(grid_arc(i, j));
            idx.emplace_back(i, j);
        }
        ArcSet s = ArcSet::from_arcs(arcs);
        for (unsigned m = 0; m < kGrid; m += 3) {
            bool expect = false;
            for (auto [i, j] : idx) expect = expect || oracle_in(i, j, m);
            CHECK(s.contains(gd(m)) == expect);
        }
        if (!s.is_full()) {
            auto rep = arcset_complement_representative(s);
            REQUIRE(rep.has_value());
            CHECK_FALSE(s.contains(*rep));
        }
        // Symmetrization matches the +180 index shift.
        ArcSet sym = antipodal_symmetrize(s);
        for (unsigned m = 0; m < kGrid; m += 7) {
            bool expect = false;
            for (auto [i, j] : idx)
                expect = expect || oracle_in(i, j, m) || oracle_in(i, j, (m + kGrid / 2) % kGrid);
            CHECK(sym.contains(gd(m)) == expect);
        }
    }
}

TEST_CASE("union is associative, commutative, idempotent") {
    Rng rng(123);
    for (int iter = 0; iter < 40; ++iter) {
        auto rand_set = [&rng]() {
            std::vector<Arc> arcs;
            int count = 1 + static_cast<int>(rng.next() % 3);
            for (int a = 0; a < count; ++a) {
                unsigned i = rng.next() % kGrid;
                unsigned j = rng.next() % kGrid;
                if (i == j) j = (j + 7) % kGrid;
                arcs.push_back(grid_arc(i, j));
            }
            return ArcSet::from_arcs(arcs);
        };
        ArcSet a = rand_set(), b = rand_set(), c = rand_set();
        CHECK(arcset_union(a, b) == arcset_union(b, a));
        CHECK(arcset_union(arcset_union(a, b), c) == arcset_union(a, arcset_union(b, c)));
        CHECK(arcset_union(a, a) == a);
        CHECK(antipodal_symmetrize(arcset_union(a, b)) ==
              arcset_union(antipodal_symmetrize(a), antipodal_symmetrize(b)));
    }
}
