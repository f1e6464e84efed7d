#pragma once

#include <cstdint>

#include "semiconvex/poly2.hpp"

namespace semiconvex {

/// Deterministic splitmix64 stream. Distribution helpers produce rationals
/// with denominator 2^32, so every sampled coordinate is exact.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next();

    /// Uniform rational in [0, 1) with denominator 2^32.
    Rat unit();

    /// Uniform rational in [a, b).
    Rat uniform(const Rat& a, const Rat& b);

    Point2 point_in_box(const AABB& box);

    /// Point strictly interior to a strictly convex polygon (triangle-fan
    /// sampling, exact barycentric coordinates).
    Point2 point_in_poly(const ConvexPoly& q);

private:
    uint64_t state_;
};

}  // namespace semiconvex
