#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixture.hpp"
#include "test_support.hpp"

#include "spanner4/geometry.hpp"

using namespace spanner4;

TEST_CASE("metric values") {
    const Point a{0, 0}, b{3, 4};
    CHECK(distance(Metric::Linf, a, b) == 4);
    CHECK(distance(Metric::L1, a, b) == 7);
    CHECK(distance(Metric::L2Squared, a, b) == 25);
}

TEST_CASE("metric inequality chain d_inf <= d_2 <= d_1 <= 2 d_inf") {
    // exact: compare squares
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto ps = testsup::random_points(12, seed);
        for (NodeId u = 0; u < ps.size(); ++u) {
            for (NodeId v = u + 1; v < ps.size(); ++v) {
                const Coord di = dist_linf(ps[u], ps[v]);
                const Coord d1 = dist_l1(ps[u], ps[v]);
                const Coord d2s = dist_l2_squared(ps[u], ps[v]);
                CHECK(di * di <= d2s);
                CHECK(d2s <= d1 * d1);
                CHECK(d1 <= 2 * di);
            }
        }
    }
}

TEST_CASE("cone_of quadrants and symmetry") {
    CHECK(cone_of({0, 0}, {3, 4}) == Cone{0});
    CHECK(cone_of({0, 0}, {-3, 4}) == Cone{1});
    // reference instance: u9 -> u17 drops into the fourth quadrant
    CHECK(cone_of(fixture::kPoints[9], fixture::kPoints[17]) == Cone{3});

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto ps = testsup::random_points(10, seed);
        for (NodeId u = 0; u < ps.size(); ++u)
            for (NodeId v = 0; v < ps.size(); ++v) {
                if (u == v) continue;
                CHECK(cone_of(ps[v], ps[u]) == cone_of(ps[u], ps[v]) + 2);
            }
    }
    CHECK_THROWS_AS((void)cone_of({0, 0}, {0, 5}), Error);
    CHECK_THROWS_AS((void)cone_of({0, 0}, {5, 0}), Error);
    CHECK_FALSE(in_cone({0, 0}, {0, 5}, Cone{0}));
    CHECK_FALSE(in_cone({0, 0}, {0, 5}, Cone{1}));
}

TEST_CASE("rect emptiness") {
    PointSet two{{{0, 0}, {10, 10}}};
    CHECK(rect_is_empty(two, 0, 1));
    PointSet three{{{0, 0}, {10, 10}, {5, 5}}};
    CHECK_FALSE(rect_is_empty(three, 0, 1));
    const auto ps = fixture::point_set();
    CHECK(rect_is_empty(ps, 9, 17));
}

TEST_CASE("max empty cone square side") {
    PointSet ps{{{0, 0}, {3, 5}}};
    CHECK(max_empty_cone_square_side(ps, 0, Cone{0}) == 5);
    CHECK_FALSE(max_empty_cone_square_side(ps, 0, Cone{1}).has_value());

    const auto fix = fixture::point_set();
    CHECK(max_empty_cone_square_side(fix, 9, Cone{3}) == 147);   // d_inf(u9, u17)
}

TEST_CASE("max empty cone square: no interior point, witness on boundary") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto ps = testsup::random_points(14, seed);
        for (NodeId v = 0; v < ps.size(); ++v) {
            for (int c = 0; c < 4; ++c) {
                const auto side = max_empty_cone_square_side(ps, v, Cone{c});
                if (!side) continue;
                const ConeSquare sq{ps[v], Cone{c}, 2 * *side};
                bool witness = false;
                for (NodeId w = 0; w < ps.size(); ++w) {
                    if (w == v) continue;
                    if (!in_cone(ps[v], ps[w], Cone{c})) continue;
                    CHECK_FALSE(sq.strictly_inside(ps[w]));
                    if (sq.on_boundary(ps[w])) witness = true;
                }
                CHECK(witness);
            }
        }
    }
}

TEST_CASE("point set validation") {
    CHECK_THROWS_AS(PointSet({{0, 0}, {0, 0}}), Error);
    CHECK_THROWS_AS(PointSet({{kCoordBound + 1, 0}, {1, 1}}), Error);
    const PointSet dup{{{0, 0}, {0, 5}, {3, 1}}};   // shared x
    const auto rep = dup.general_position();
    CHECK_FALSE(rep.ok());
    CHECK(rep.duplicate_x.size() == 1);
    CHECK(rep.duplicate_y.empty());
}

TEST_CASE("reference instance general position report") {
    // one shared y (u5 and u22); everything else distinct
    const auto rep = fixture::point_set().general_position();
    CHECK(rep.duplicate_x.empty());
    REQUIRE(rep.duplicate_y.size() == 1);
    CHECK(rep.duplicate_y[0] == std::pair<NodeId, NodeId>{5, 22});
}

TEST_CASE("segment predicates") {
    CHECK(segments_properly_cross({0, 0}, {10, 10}, {0, 10}, {10, 0}));
    CHECK_FALSE(segments_properly_cross({0, 0}, {10, 10}, {0, 1}, {10, 11}));
    CHECK_FALSE(segments_properly_cross({0, 0}, {10, 10}, {10, 10}, {20, 0}));
    CHECK(point_in_open_segment({0, 0}, {10, 10}, {5, 5}));
    CHECK_FALSE(point_in_open_segment({0, 0}, {10, 10}, {10, 10}));
    CHECK_FALSE(point_in_open_segment({0, 0}, {10, 10}, {5, 6}));
}

TEST_CASE("convex hull orientation and containment") {
    const auto ps = fixture::point_set();
    const auto hull = convex_hull(ps);
    REQUIRE(hull.size() >= 3);
    for (size_t i = 0; i < hull.size(); ++i) {
        const Point a = ps[hull[i]];
        const Point b = ps[hull[(i + 1) % hull.size()]];
        for (NodeId k = 0; k < ps.size(); ++k)
            CHECK(orient(a, b, ps[k]) >= 0);   // everything left of each CCW hull edge
    }
}
