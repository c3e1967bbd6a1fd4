#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spanner4/errors.hpp"

namespace spanner4 {

using Coord = std::int64_t;
using NodeId = std::int32_t;

/// Coordinate magnitude bound. Every predicate below stays exact in 64-bit
/// arithmetic for |x|,|y| <= kCoordBound (differences, products of two
/// differences, and tie-break-scaled coordinates all fit).
inline constexpr Coord kCoordBound = Coord{1} << 20;

struct Point {
    Coord x = 0;
    Coord y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Quadrant cone index, counter-clockwise from the first quadrant;
/// arithmetic is modulo 4.
struct Cone {
    int idx = 0;
    friend Cone operator+(Cone c, int d) { return Cone{((c.idx + d) % 4 + 4) % 4}; }
    Cone opposite() const { return *this + 2; }
    friend bool operator==(const Cone&, const Cone&) = default;
};

enum class Metric { L1, L2Squared, Linf };

Coord dx_abs(Point p, Point q);
Coord dy_abs(Point p, Point q);
Coord dist_l1(Point p, Point q);
Coord dist_l2_squared(Point p, Point q);
Coord dist_linf(Point p, Point q);
Coord distance(Metric m, Point p, Point q);
double dist_l2(Point p, Point q);

/// Sign of the cross product (b-a) x (c-a); exact.
int orient(Point a, Point b, Point c);

/// Cone of u that contains v. Throws DegenerateDirection when v lies on a
/// boundary ray (shared x or y coordinate).
Cone cone_of(Point u, Point v);

/// True iff v lies strictly inside cone i of u (boundary rays excluded;
/// never throws).
bool in_cone(Point u, Point v, Cone i);

struct GeneralPositionReport {
    std::vector<std::pair<NodeId, NodeId>> duplicate_x;
    std::vector<std::pair<NodeId, NodeId>> duplicate_y;
    bool ok() const { return duplicate_x.empty() && duplicate_y.empty(); }
};

/// Immutable point set; index is the NodeId.
class PointSet {
public:
    PointSet() = default;
    /// Validates the coordinate bound and rejects coincident points.
    /// Distinct-coordinate generality is reported, not enforced, because
    /// pipeline stages only consult pairs that interact; see
    /// general_position().
    explicit PointSet(std::vector<Point> pts);

    NodeId size() const { return static_cast<NodeId>(pts_.size()); }
    const Point& operator[](NodeId i) const { return pts_[static_cast<size_t>(i)]; }
    const std::vector<Point>& points() const { return pts_; }

    GeneralPositionReport general_position() const;

private:
    std::vector<Point> pts_;
};

/// Axis-parallel rectangle spanned by two points.
struct Rect {
    Point a, b;
    bool strictly_inside(Point p) const;
};

/// True iff no point of P other than u,v lies strictly inside R(u,v).
bool rect_is_empty(const PointSet& ps, NodeId u, NodeId v);

/// Axis-parallel square with its apex at a cone corner; side stored doubled
/// so half-integral witnesses stay exact.
struct ConeSquare {
    Point apex;
    Cone cone;
    Coord side2x = 0;
    bool strictly_inside(Point p) const;
    bool on_boundary(Point p) const;
};

/// Largest s such that the cone-i square of side s at v is empty; equals the
/// minimum d_inf over points strictly inside the cone. nullopt = unbounded
/// (empty cone).
std::optional<Coord> max_empty_cone_square_side(const PointSet& ps, NodeId v, Cone i);

/// Proper crossing: open segment interiors intersect in a single point.
bool segments_properly_cross(Point a, Point b, Point c, Point d);

/// True iff p lies on the open segment (a,b).
bool point_in_open_segment(Point a, Point b, Point p);

/// Convex hull in counter-clockwise order (indices into ps). Collinear
/// boundary points are dropped.
std::vector<NodeId> convex_hull(const PointSet& ps);

/// Strict counter-clockwise ordering of directions around an origin; total
/// over directions that share no ray.
bool ccw_less(Point origin, Point a, Point b);

} // namespace spanner4
