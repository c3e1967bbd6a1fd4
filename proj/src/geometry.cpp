#include "spanner4/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace spanner4 {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DegenerateDirection: return "DegenerateDirection";
        case Errc::GeneralPositionViolation: return "GeneralPositionViolation";
        case Errc::DegenerateSquareWitness: return "DegenerateSquareWitness";
        case Errc::ClassificationContradiction: return "ClassificationContradiction";
        case Errc::ChainCycleDetected: return "ChainCycleDetected";
        case Errc::ChargeOverflow: return "ChargeOverflow";
        case Errc::DegreeOverflow: return "DegreeOverflow";
        case Errc::PlanarityViolation: return "PlanarityViolation";
        case Errc::PositionOutOfRange: return "PositionOutOfRange";
        case Errc::AnchorUndefined: return "AnchorUndefined";
        case Errc::NotAPath: return "NotAPath";
        case Errc::DisconnectedGraph: return "DisconnectedGraph";
        case Errc::CoordinateSpaceExhausted: return "CoordinateSpaceExhausted";
        case Errc::InconsistentFiles: return "InconsistentFiles";
    }
    return "UnknownError";
}

Coord dx_abs(Point p, Point q) { return std::abs(p.x - q.x); }
Coord dy_abs(Point p, Point q) { return std::abs(p.y - q.y); }
Coord dist_l1(Point p, Point q) { return dx_abs(p, q) + dy_abs(p, q); }
Coord dist_l2_squared(Point p, Point q) {
    const Coord dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}
Coord dist_linf(Point p, Point q) { return std::max(dx_abs(p, q), dy_abs(p, q)); }

Coord distance(Metric m, Point p, Point q) {
    switch (m) {
        case Metric::L1: return dist_l1(p, q);
        case Metric::L2Squared: return dist_l2_squared(p, q);
        case Metric::Linf: return dist_linf(p, q);
    }
    return 0;
}

double dist_l2(Point p, Point q) {
    return std::sqrt(static_cast<double>(dist_l2_squared(p, q)));
}

int orient(Point a, Point b, Point c) {
    const Coord v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

Cone cone_of(Point u, Point v) {
    const Coord dx = v.x - u.x, dy = v.y - u.y;
    if (dx == 0 || dy == 0)
        throw Error(Errc::DegenerateDirection, "point on cone boundary ray");
    if (dx > 0) return dy > 0 ? Cone{0} : Cone{3};
    return dy > 0 ? Cone{1} : Cone{2};
}

bool in_cone(Point u, Point v, Cone i) {
    const Coord dx = v.x - u.x, dy = v.y - u.y;
    if (dx == 0 || dy == 0) return false;
    return cone_of(u, v) == i;
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::map<std::pair<Coord, Coord>, NodeId> seen;
    for (NodeId i = 0; i < size(); ++i) {
        const Point& p = pts_[static_cast<size_t>(i)];
        if (std::abs(p.x) > kCoordBound || std::abs(p.y) > kCoordBound)
            throw Error(Errc::GeneralPositionViolation, "coordinate exceeds magnitude bound");
        auto [it, fresh] = seen.emplace(std::make_pair(p.x, p.y), i);
        if (!fresh)
            throw Error(Errc::GeneralPositionViolation, "coincident points");
    }
}

GeneralPositionReport PointSet::general_position() const {
    GeneralPositionReport rep;
    std::map<Coord, NodeId> by_x, by_y;
    for (NodeId i = 0; i < size(); ++i) {
        const Point& p = pts_[static_cast<size_t>(i)];
        if (auto [it, fresh] = by_x.emplace(p.x, i); !fresh)
            rep.duplicate_x.emplace_back(it->second, i);
        if (auto [it, fresh] = by_y.emplace(p.y, i); !fresh)
            rep.duplicate_y.emplace_back(it->second, i);
    }
    return rep;
}

bool Rect::strictly_inside(Point p) const {
    const auto [x0, x1] = std::minmax(a.x, b.x);
    const auto [y0, y1] = std::minmax(a.y, b.y);
    return x0 < p.x && p.x < x1 && y0 < p.y && p.y < y1;
}

bool rect_is_empty(const PointSet& ps, NodeId u, NodeId v) {
    const Rect r{ps[u], ps[v]};
    for (NodeId k = 0; k < ps.size(); ++k) {
        if (k == u || k == v) continue;
        if (r.strictly_inside(ps[k])) return false;
    }
    return true;
}

namespace {

// Doubled offsets of p relative to the square's axis-aligned bounding box.
// For cone i the square spans [0,s] or [-s,0] on each axis from the apex.
std::pair<std::pair<Coord, Coord>, std::pair<Coord, Coord>> square_box2x(const ConeSquare& s) {
    const Coord ax = 2 * s.apex.x, ay = 2 * s.apex.y;
    Coord x0 = ax, x1 = ax, y0 = ay, y1 = ay;
    if (s.cone.idx == 0 || s.cone.idx == 3) x1 += s.side2x; else x0 -= s.side2x;
    if (s.cone.idx == 0 || s.cone.idx == 1) y1 += s.side2x; else y0 -= s.side2x;
    return {{x0, x1}, {y0, y1}};
}

} // namespace

bool ConeSquare::strictly_inside(Point p) const {
    const auto [xs, ys] = square_box2x(*this);
    const Coord px = 2 * p.x, py = 2 * p.y;
    return xs.first < px && px < xs.second && ys.first < py && py < ys.second;
}

bool ConeSquare::on_boundary(Point p) const {
    const auto [xs, ys] = square_box2x(*this);
    const Coord px = 2 * p.x, py = 2 * p.y;
    const bool inx = xs.first <= px && px <= xs.second;
    const bool iny = ys.first <= py && py <= ys.second;
    if (!inx || !iny) return false;
    return px == xs.first || px == xs.second || py == ys.first || py == ys.second;
}

std::optional<Coord> max_empty_cone_square_side(const PointSet& ps, NodeId v, Cone i) {
    std::optional<Coord> best;
    for (NodeId w = 0; w < ps.size(); ++w) {
        if (w == v) continue;
        if (!in_cone(ps[v], ps[w], i)) continue;
        const Coord d = dist_linf(ps[v], ps[w]);
        if (!best || d < *best) best = d;
    }
    return best;
}

bool segments_properly_cross(Point a, Point b, Point c, Point d) {
    const int d1 = orient(c, d, a), d2 = orient(c, d, b);
    const int d3 = orient(a, b, c), d4 = orient(a, b, d);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
           ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

bool point_in_open_segment(Point a, Point b, Point p) {
    if (orient(a, b, p) != 0) return false;
    const auto [x0, x1] = std::minmax(a.x, b.x);
    const auto [y0, y1] = std::minmax(a.y, b.y);
    if (x0 == x1) return y0 < p.y && p.y < y1;
    return x0 < p.x && p.x < x1 && y0 <= p.y && p.y <= y1;
}

std::vector<NodeId> convex_hull(const PointSet& ps) {
    std::vector<NodeId> idx(static_cast<size_t>(ps.size()));
    for (NodeId i = 0; i < ps.size(); ++i) idx[static_cast<size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](NodeId a, NodeId b) {
        return std::make_pair(ps[a].x, ps[a].y) < std::make_pair(ps[b].x, ps[b].y);
    });
    if (idx.size() <= 2) return idx;
    std::vector<NodeId> lo, up;
    for (NodeId k : idx) {
        while (lo.size() >= 2 && orient(ps[lo[lo.size() - 2]], ps[lo.back()], ps[k]) <= 0)
            lo.pop_back();
        lo.push_back(k);
    }
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        while (up.size() >= 2 && orient(ps[up[up.size() - 2]], ps[up.back()], ps[*it]) <= 0)
            up.pop_back();
        up.push_back(*it);
    }
    lo.pop_back();
    up.pop_back();
    lo.insert(lo.end(), up.begin(), up.end());
    return lo;
}

bool ccw_less(Point origin, Point a, Point b) {
    const Coord ax = a.x - origin.x, ay = a.y - origin.y;
    const Coord bx = b.x - origin.x, by = b.y - origin.y;
    const int ha = (ay > 0 || (ay == 0 && ax > 0)) ? 0 : 1;
    const int hb = (by > 0 || (by == 0 && bx > 0)) ? 0 : 1;
    if (ha != hb) return ha < hb;
    const Coord cr = ax * by - ay * bx;
    return cr > 0;
}

} // namespace spanner4
