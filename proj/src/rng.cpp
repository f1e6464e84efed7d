#include "semiconvex/rng.hpp"

namespace semiconvex {

uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rat Rng::unit() {
    long k = static_cast<long>(next() >> 32);
    return Rat(k, 1L << 32);
}

Rat Rng::uniform(const Rat& a, const Rat& b) { return a + (b - a) * unit(); }

Point2 Rng::point_in_box(const AABB& box) {
    return {uniform(box.min.x, box.max.x), uniform(box.min.y, box.max.y)};
}

Point2 Rng::point_in_poly(const ConvexPoly& q) {
    // Pick a fan triangle (v0, v_i, v_{i+1}) weighted by exact area, then a
    // strictly interior point of it. Fold (s,t) into the lower-left triangle.
    int n = q.size();
    std::vector<Rat> cum;
    Rat total(0);
    for (int i = 1; i + 1 < n; ++i) {
        total += cross(q.v[i] - q.v[0], q.v[i + 1] - q.v[0]);
        cum.push_back(total);
    }
    Rat pick = unit() * total;
    int tri = 1;
    for (size_t i = 0; i < cum.size(); ++i) {
        if (pick < cum[i]) {
            tri = static_cast<int>(i) + 1;
            break;
        }
    }
    const Point2& a = q.v[0];
    const Point2& b = q.v[tri];
    const Point2& c = q.v[tri + 1];
    for (;;) {
        Rat s = unit(), t = unit();
        if (s + t > Rat(1)) {
            s = Rat(1) - s;
            t = Rat(1) - t;
        }
        if (s.sign() == 0 || t.sign() == 0 || s + t == Rat(1)) continue;  // stay strictly interior
        Point2 p = a + s * (b - a) + t * (c - a);
        if (locate_point(q, p).loc == PointLoc::Interior) return p;
    }
}

}  // namespace semiconvex
