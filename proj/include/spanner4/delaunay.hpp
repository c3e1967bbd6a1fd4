#pragma once

#include <vector>

#include "spanner4/edge_set.hpp"
#include "spanner4/geometry.hpp"

namespace spanner4 {

/// Tie-break weights applied to coordinates inside the empty-square
/// predicate: x scales by kTieScaleX, y by kTieScaleY. Squares in scaled
/// space correspond to rectangles infinitesimally taller than wide in true
/// space, so a configuration of four in-bounds integer points on one empty
/// square boundary resolves deterministically (two of them would need a
/// shared coordinate for the tie to survive scaling).
inline constexpr Coord kTieScaleX = (Coord{1} << 25) + 1;
inline constexpr Coord kTieScaleY = Coord{1} << 25;

/// Planar triangulation with a rotation system.
struct Triangulation {
    NodeId n = 0;
    std::vector<Edge> edges;                 // canonical sorted pairs
    std::vector<std::vector<NodeId>> ring;   // per node, neighbors in CCW order
    EdgeSet edge_set;

    bool has_edge(NodeId a, NodeId b) const { return edge_set.contains_edge(a, b); }
};

/// Faces extracted from the rotation system. Interior walks are CCW
/// (positive signed area); the outer walk is CW.
struct FaceSet {
    std::vector<std::vector<NodeId>> walks;
    int outer = -1;
};

/// True iff some axis-parallel square has u and v on its boundary and no
/// point of P strictly inside, decided on tie-break-scaled coordinates.
/// Throws DegenerateSquareWitness if every witness is pinned by two extra
/// boundary points (needs a shared input coordinate).
bool is_linf_delaunay_edge(const PointSet& ps, NodeId u, NodeId v);

Triangulation build_triangulation(const PointSet& ps);

/// Same edge set as build_triangulation, single-threaded; kept as the
/// reference implementation for tests and benchmarks.
Triangulation build_triangulation_serial(const PointSet& ps);

FaceSet extract_faces(const PointSet& ps, const Triangulation& t);

/// 2x the signed area of a closed walk.
Coord walk_signed_area2(const PointSet& ps, const std::vector<NodeId>& walk);

bool is_connected(NodeId n, const std::vector<Edge>& edges);

} // namespace spanner4
