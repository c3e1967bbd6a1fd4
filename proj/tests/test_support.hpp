#pragma once

#include <random>
#include <set>

#include "spanner4/geometry.hpp"
#include "spanner4/pipeline.hpp"

namespace testsup {

using namespace spanner4;

/// Deterministic random instance with pairwise-distinct coordinates.
inline PointSet random_points(NodeId n, std::uint64_t seed, Coord max_coord = 2000) {
    std::mt19937_64 rng(seed);
    std::set<Coord> xs, ys;
    std::vector<Point> pts;
    while (static_cast<NodeId>(pts.size()) < n) {
        const Coord x = static_cast<Coord>(rng() % static_cast<std::uint64_t>(max_coord + 1));
        const Coord y = static_cast<Coord>(rng() % static_cast<std::uint64_t>(max_coord + 1));
        if (xs.count(x) || ys.count(y)) continue;
        xs.insert(x);
        ys.insert(y);
        pts.push_back({x, y});
    }
    return PointSet{pts};
}

inline Pipeline random_pipeline(NodeId n, std::uint64_t seed, Coord max_coord = 2000) {
    return run_pipeline(random_points(n, seed, max_coord));
}

} // namespace testsup
