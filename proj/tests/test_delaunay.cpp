#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "delaunay_oracle.hpp"
#include "fixture.hpp"
#include "test_support.hpp"

#include "spanner4/delaunay.hpp"

using namespace spanner4;

TEST_CASE("single point: no edges, one unbounded face") {
    PointSet ps{{{5, 5}}};
    const auto t = build_triangulation(ps);
    CHECK(t.edges.empty());
    const auto faces = extract_faces(ps, t);
    CHECK(faces.walks.size() == 1);
    CHECK(faces.outer == 0);
}

TEST_CASE("two points are always adjacent") {
    PointSet ps{{{0, 0}, {7, 3}}};
    CHECK(is_linf_delaunay_edge(ps, 0, 1));
    const auto t = build_triangulation(ps);
    CHECK(t.edges.size() == 1);
}

TEST_CASE("triple with clear sight lines forms a triangle") {
    PointSet ps{{{0, 0}, {10, 2}, {5, 9}}};
    const auto t = build_triangulation(ps);
    CHECK(t.edges.size() == 3);
}

TEST_CASE("triple blocked through its bounding box forms a path") {
    // (5,3) sits strictly inside the bounding box of the other two, so no
    // axis-parallel square through them can be empty.
    PointSet ps{{{0, 0}, {10, 7}, {5, 3}}};
    const auto t = build_triangulation(ps);
    CHECK(t.edges == std::vector<Edge>{{0, 2}, {1, 2}});
}

TEST_CASE("co-square quadruple resolves to one diagonal") {
    // Four points on the boundary of one empty square; the tie-break keeps
    // the diagonal between the horizontal sides.
    PointSet ps{{{147, 312}, {250, 350}, {185, 305}, {204, 408}}};
    const auto t = build_triangulation(ps);
    CHECK(t.edges == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("reference instance triangulation matches the expected edge set") {
    const auto ps = fixture::point_set();
    const auto t = build_triangulation(ps);
    CHECK(t.edges == fixture::triangulation_edges());
    CHECK(t.edges.size() == 75);
}

TEST_CASE("predicate symmetry") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto ps = testsup::random_points(11, seed, 80);
        for (NodeId u = 0; u < ps.size(); ++u)
            for (NodeId v = u + 1; v < ps.size(); ++v)
                CHECK(is_linf_delaunay_edge(ps, u, v) == is_linf_delaunay_edge(ps, v, u));
    }
}

TEST_CASE("slide decider agrees with the pinned-square oracle") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const NodeId n = 3 + static_cast<NodeId>(seed % 10);
        const auto ps = testsup::random_points(n, seed, 50);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                CHECK(is_linf_delaunay_edge(ps, u, v) == testsup::oracle_delaunay_edge(ps, u, v));
    }
}

TEST_CASE("parallel and serial builders agree") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto ps = testsup::random_points(60, seed);
        CHECK(build_triangulation(ps).edges == build_triangulation_serial(ps).edges);
    }
}

TEST_CASE("faces: Euler formula, triangular interiors, edge-face incidence") {
    const auto check_one = [](const PointSet& ps) {
        const auto t = build_triangulation(ps);
        REQUIRE(is_connected(t.n, t.edges));
        if (t.n >= 3) CHECK(static_cast<std::int64_t>(t.edges.size()) <= 3 * t.n - 6);
        if (t.n < 2) return;
        const auto faces = extract_faces(ps, t);
        CHECK(t.n - static_cast<std::int64_t>(t.edges.size()) +
                  static_cast<std::int64_t>(faces.walks.size()) ==
              2);
        std::map<std::pair<NodeId, NodeId>, int> edge_uses;
        for (size_t i = 0; i < faces.walks.size(); ++i) {
            const auto& w = faces.walks[i];
            if (static_cast<int>(i) != faces.outer) CHECK(w.size() == 3);
            for (size_t j = 0; j < w.size(); ++j)
                ++edge_uses[make_edge(w[j], w[(j + 1) % w.size()])];
        }
        for (auto [a, b] : t.edges) CHECK(edge_uses[{a, b}] == 2);
        // no two interior triangles share more than one edge (an ear may
        // share two edges with the outer face)
        std::map<std::pair<NodeId, NodeId>, std::vector<int>> by_edge;
        for (size_t i = 0; i < faces.walks.size(); ++i) {
            if (static_cast<int>(i) == faces.outer) continue;
            const auto& w = faces.walks[i];
            for (size_t j = 0; j < w.size(); ++j)
                by_edge[make_edge(w[j], w[(j + 1) % w.size()])].push_back(static_cast<int>(i));
        }
        std::map<std::pair<int, int>, int> shared;
        for (const auto& [e, fs] : by_edge)
            if (fs.size() == 2 && fs[0] != fs[1]) ++shared[{fs[0], fs[1]}];
        for (const auto& [pr, cnt] : shared) CHECK(cnt <= 1);
    };
    check_one(fixture::point_set());
    for (std::uint64_t seed = 0; seed < 12; ++seed)
        check_one(testsup::random_points(4 + static_cast<NodeId>(seed * 7) % 60, seed));
}

TEST_CASE("hull cycle embeds in the outer face walk") {
    const auto check_one = [](const PointSet& ps) {
        const auto t = build_triangulation(ps);
        if (t.n < 3) return;
        const auto faces = extract_faces(ps, t);
        REQUIRE(faces.outer >= 0);
        std::vector<NodeId> outer = faces.walks[static_cast<size_t>(faces.outer)];
        std::reverse(outer.begin(), outer.end());   // outer walk is CW
        const auto hull = convex_hull(ps);
        bool found = false;
        for (size_t start = 0; start < outer.size() && !found; ++start) {
            size_t j = 0;
            for (size_t k = 0; k < outer.size() && j < hull.size(); ++k)
                if (outer[(start + k) % outer.size()] == hull[j]) ++j;
            found = j == hull.size();
        }
        CHECK(found);
    };
    check_one(fixture::point_set());
    for (std::uint64_t seed = 100; seed < 112; ++seed)
        check_one(testsup::random_points(5 + static_cast<NodeId>(seed % 40), seed));
}

TEST_CASE("reference instance outer face detours around a blocked hull edge") {
    // The hull edge (27,9) admits no empty square: point 11 sits inside its
    // bounding box. The outer walk therefore visits 11 between them.
    const auto ps = fixture::point_set();
    CHECK_FALSE(is_linf_delaunay_edge(ps, 27, 9));
    const auto t = build_triangulation(ps);
    const auto faces = extract_faces(ps, t);
    const auto& outer = faces.walks[static_cast<size_t>(faces.outer)];
    CHECK(outer.size() == 9);
    CHECK(convex_hull(ps).size() == 8);
    CHECK(std::find(outer.begin(), outer.end(), 11) != outer.end());
}
