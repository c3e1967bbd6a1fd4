#include "spanner4/delaunay.hpp"

#include <algorithm>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spanner4 {

namespace {

struct ScaledPoint {
    Coord x, y;
};

std::vector<ScaledPoint> tie_scale(const PointSet& ps) {
    std::vector<ScaledPoint> out(static_cast<size_t>(ps.size()));
    for (NodeId i = 0; i < ps.size(); ++i)
        out[static_cast<size_t>(i)] = {kTieScaleX * ps[i].x, kTieScaleY * ps[i].y};
    return out;
}

// Decides the pair (u,v) by sliding the minimal square through u and v along
// its free axis and testing emptiness at the slide breakpoints. Every empty
// witness square shrinks to an empty minimal square, so scanning the minimal
// family is sufficient.
bool scaled_edge_decision(const std::vector<ScaledPoint>& q, size_t u, size_t v) {
    Coord ux = q[u].x, uy = q[u].y, vx = q[v].x, vy = q[v].y;
    bool transposed = false;
    if (dy_abs({ux, uy}, {vx, vy}) > dx_abs({ux, uy}, {vx, vy})) {
        std::swap(ux, uy);
        std::swap(vx, vy);
        transposed = true;
    }
    const Coord w = std::abs(ux - vx);
    const Coord lox = std::min(ux, vx);
    const Coord lo = std::max(uy, vy) - w;
    const Coord hi = std::min(uy, vy);

    std::vector<Coord> ys;
    ys.reserve(16);
    for (size_t k = 0; k < q.size(); ++k) {
        if (k == u || k == v) continue;
        const Coord px = transposed ? q[k].y : q[k].x;
        const Coord py = transposed ? q[k].x : q[k].y;
        if (lox < px && px < lox + w) ys.push_back(py);
    }
    std::sort(ys.begin(), ys.end());

    const auto blocked = [&](Coord t) {
        auto it = std::upper_bound(ys.begin(), ys.end(), t);
        return it != ys.end() && *it < t + w;
    };

    std::vector<Coord> cands{lo, hi};
    for (Coord y : ys) {
        if (lo <= y && y <= hi) cands.push_back(y);
        if (lo <= y - w && y - w <= hi) cands.push_back(y - w);
    }
    std::vector<Coord> valid;
    for (Coord t : cands)
        if (!blocked(t)) valid.push_back(t);
    if (valid.empty()) return false;

    // A witness exists. Accept unless every valid placement is a pinch point
    // carrying two extra boundary points.
    for (Coord a : valid) {
        auto it = std::lower_bound(ys.begin(), ys.end(), a + w);
        Coord b = hi;
        if (it != ys.end()) b = std::min(b, *it - w);
        if (b > a) return true;
        const auto count_eq = [&](Coord val) {
            auto r = std::equal_range(ys.begin(), ys.end(), val);
            return static_cast<int>(r.second - r.first);
        };
        if (count_eq(a) + count_eq(a + w) <= 1) return true;
    }
    throw Error(Errc::DegenerateSquareWitness,
                "every witness square has four points on its boundary");
}

std::vector<std::vector<NodeId>> build_rings(const PointSet& ps,
                                             const std::vector<Edge>& edges) {
    std::vector<std::vector<NodeId>> ring(static_cast<size_t>(ps.size()));
    for (auto [a, b] : edges) {
        ring[static_cast<size_t>(a)].push_back(b);
        ring[static_cast<size_t>(b)].push_back(a);
    }
    for (NodeId u = 0; u < ps.size(); ++u) {
        auto& r = ring[static_cast<size_t>(u)];
        std::sort(r.begin(), r.end(),
                  [&](NodeId a, NodeId b) { return ccw_less(ps[u], ps[a], ps[b]); });
    }
    return ring;
}

Triangulation assemble(const PointSet& ps, std::vector<Edge> edges) {
    Triangulation t;
    t.n = ps.size();
    std::sort(edges.begin(), edges.end());
    t.edges = std::move(edges);
    for (auto [a, b] : t.edges) t.edge_set.insert(edge_key(a, b));
    t.edge_set.normalize();
    t.ring = build_rings(ps, t.edges);
    return t;
}

} // namespace

bool is_linf_delaunay_edge(const PointSet& ps, NodeId u, NodeId v) {
    const auto q = tie_scale(ps);
    return scaled_edge_decision(q, static_cast<size_t>(u), static_cast<size_t>(v));
}

Triangulation build_triangulation(const PointSet& ps) {
    const auto q = tie_scale(ps);
    const std::int64_t n = ps.size();
    std::vector<std::uint8_t> adj(static_cast<size_t>(n * n), 0);

#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u + 1; v < n; ++v) {
            if (scaled_edge_decision(q, static_cast<size_t>(u), static_cast<size_t>(v)))
                adj[static_cast<size_t>(u * n + v)] = 1;
        }
    }

    std::vector<Edge> edges;
    for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = u + 1; v < n; ++v)
            if (adj[static_cast<size_t>(u * n + v)])
                edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    return assemble(ps, std::move(edges));
}

Triangulation build_triangulation_serial(const PointSet& ps) {
    const auto q = tie_scale(ps);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < ps.size(); ++u)
        for (NodeId v = u + 1; v < ps.size(); ++v)
            if (scaled_edge_decision(q, static_cast<size_t>(u), static_cast<size_t>(v)))
                edges.push_back({u, v});
    return assemble(ps, std::move(edges));
}

Coord walk_signed_area2(const PointSet& ps, const std::vector<NodeId>& walk) {
    Coord s = 0;
    for (size_t i = 0; i < walk.size(); ++i) {
        const Point a = ps[walk[i]];
        const Point b = ps[walk[(i + 1) % walk.size()]];
        s += a.x * b.y - a.y * b.x;
    }
    return s;
}

FaceSet extract_faces(const PointSet& ps, const Triangulation& t) {
    FaceSet fs;
    if (t.edges.empty()) {
        // one unbounded face, no boundary walk
        fs.walks.push_back({});
        fs.outer = 0;
        return fs;
    }
    // Directed half-edge successor: from (a,b), continue with the neighbor
    // preceding a in b's CCW ring. Interior faces come out CCW.
    std::vector<std::uint64_t> visited;
    const auto seen = [&](NodeId a, NodeId b) {
        return std::binary_search(visited.begin(), visited.end(), dir_key(a, b));
    };
    std::vector<std::uint64_t> pending;
    for (NodeId u = 0; u < t.n; ++u)
        for (NodeId v : t.ring[static_cast<size_t>(u)]) pending.push_back(dir_key(u, v));
    std::sort(pending.begin(), pending.end());

    for (std::uint64_t start : pending) {
        const NodeId su = static_cast<NodeId>(start >> 32);
        const NodeId sv = static_cast<NodeId>(start & 0xffffffffu);
        if (seen(su, sv)) continue;
        std::vector<NodeId> walk;
        NodeId a = su, b = sv;
        while (!seen(a, b)) {
            visited.insert(std::upper_bound(visited.begin(), visited.end(), dir_key(a, b)),
                           dir_key(a, b));
            walk.push_back(a);
            const auto& r = t.ring[static_cast<size_t>(b)];
            const auto it = std::find(r.begin(), r.end(), a);
            const size_t i = static_cast<size_t>(it - r.begin());
            a = b;
            b = r[(i + r.size() - 1) % r.size()];
        }
        fs.walks.push_back(std::move(walk));
    }

    if (fs.walks.size() == 1) {
        fs.outer = 0;
        return fs;
    }
    for (size_t i = 0; i < fs.walks.size(); ++i) {
        if (walk_signed_area2(ps, fs.walks[i]) < 0) {
            if (fs.outer != -1)
                throw Error(Errc::PlanarityViolation, "multiple clockwise faces");
            fs.outer = static_cast<int>(i);
        }
    }
    if (fs.outer == -1)
        throw Error(Errc::PlanarityViolation, "no outer face found");
    return fs;
}

bool is_connected(NodeId n, const std::vector<Edge>& edges) {
    if (n <= 1) return true;
    std::vector<std::vector<NodeId>> adj(static_cast<size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<char> vis(static_cast<size_t>(n), 0);
    std::queue<NodeId> q;
    q.push(0);
    vis[0] = 1;
    NodeId count = 1;
    while (!q.empty()) {
        const NodeId u = q.front();
        q.pop();
        for (NodeId v : adj[static_cast<size_t>(u)]) {
            if (!vis[static_cast<size_t>(v)]) {
                vis[static_cast<size_t>(v)] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n;
}

} // namespace spanner4
