#include "spanner4/yao.hpp"

#include <algorithm>

namespace spanner4 {

YaoGraph build_y4(const PointSet& ps, const Triangulation& t) {
    YaoGraph y;
    y.n = ps.size();
    y.out.assign(static_cast<size_t>(y.n), {kNone, kNone, kNone, kNone});
    y.members.resize(static_cast<size_t>(y.n));

    // Per cone, the closest T neighbor by d_inf (smallest id on ties). The
    // globally closest point in a cone always shares an empty square with v,
    // so restricting the scan to T neighbors loses nothing.
    for (NodeId v = 0; v < y.n; ++v) {
        std::array<std::pair<Coord, NodeId>, 4> best;
        best.fill({0, kNone});
        for (NodeId w : t.ring[static_cast<size_t>(v)]) {
            const Coord dxa = std::abs(ps[w].x - ps[v].x);
            const Coord dya = std::abs(ps[w].y - ps[v].y);
            if (dxa == 0 || dya == 0)
                throw Error(Errc::DegenerateDirection,
                            "triangulation edge lies on a cone boundary ray");
            const int i = cone_of(ps[v], ps[w]).idx;
            const Coord d = std::max(dxa, dya);
            auto& b = best[static_cast<size_t>(i)];
            if (b.second == kNone || std::make_pair(d, w) < b) b = {d, w};
        }
        for (int i = 0; i < 4; ++i)
            y.out[static_cast<size_t>(v)][static_cast<size_t>(i)] = best[static_cast<size_t>(i)].second;
    }

    for (NodeId v = 0; v < y.n; ++v)
        for (int i = 0; i < 4; ++i)
            if (const NodeId w = y.out[static_cast<size_t>(v)][static_cast<size_t>(i)]; w != kNone)
                y.directed.insert(dir_key(v, w));
    y.directed.normalize();

    std::vector<Edge> edges;
    for (NodeId v = 0; v < y.n; ++v)
        for (int i = 0; i < 4; ++i)
            if (const NodeId w = y.out[static_cast<size_t>(v)][static_cast<size_t>(i)]; w != kNone)
                edges.push_back(make_edge(v, w));
    y.edges = sorted_edges(edges);
    for (auto [a, b] : y.edges) y.edge_set.insert(edge_key(a, b));
    y.edge_set.normalize();

    for (auto [a, b] : y.edges) {
        y.members[static_cast<size_t>(a)][static_cast<size_t>(cone_of(ps[a], ps[b]).idx)].push_back(b);
        y.members[static_cast<size_t>(b)][static_cast<size_t>(cone_of(ps[b], ps[a]).idx)].push_back(a);
    }
    for (NodeId u = 0; u < y.n; ++u)
        for (auto& m : y.members[static_cast<size_t>(u)])
            std::sort(m.begin(), m.end(),
                      [&](NodeId p, NodeId q) { return ccw_less(ps[u], ps[p], ps[q]); });
    return y;
}

std::optional<Fan> fan(const YaoGraph& y, NodeId u, Cone i) {
    const auto& m = y.cone_members(u, i);
    if (m.size() < 2) return std::nullopt;
    return Fan{u, i, m};
}

const EdgeClass& EdgeClassTable::at(NodeId a, NodeId b) const {
    const auto k = edge_key(a, b);
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it == keys_.end() || *it != k)
        throw Error(Errc::ClassificationContradiction, "edge not in classification table");
    return classes_[static_cast<size_t>(it - keys_.begin())];
}

EdgeClassTable classify_edges(const PointSet& ps, const YaoGraph& y) {
    std::vector<std::uint64_t> keys;
    keys.reserve(y.edges.size());
    for (auto [a, b] : y.edges) keys.push_back(edge_key(a, b));

    std::vector<EdgeClass> classes(y.edges.size());
    for (size_t e = 0; e < y.edges.size(); ++e) {
        auto [a, b] = y.edges[e];
        EdgeClass c;
        c.a = a;
        c.b = b;
        c.cone_at_a = cone_of(ps[a], ps[b]);
        c.cone_at_b = cone_of(ps[b], ps[a]);
        const auto& ma = y.cone_members(a, c.cone_at_a);
        const auto& mb = y.cone_members(b, c.cone_at_b);
        c.fan_size_a = static_cast<int>(ma.size());
        c.fan_size_b = static_cast<int>(mb.size());
        c.pos_a = static_cast<int>(std::find(ma.begin(), ma.end(), b) - ma.begin());
        c.pos_b = static_cast<int>(std::find(mb.begin(), mb.end(), a) - mb.begin());
        c.mutually_single = c.fan_size_a == 1 && c.fan_size_b == 1;
        c.dual = c.fan_size_a >= 2 && c.fan_size_b >= 2;
        c.middle = (c.fan_size_a >= 3 && c.pos_a > 0 && c.pos_a < c.fan_size_a - 1) ||
                   (c.fan_size_b >= 3 && c.pos_b > 0 && c.pos_b < c.fan_size_b - 1);
        classes[e] = std::move(c);
    }

    // Canonical owners: consecutive member pairs of every cone list.
    for (NodeId u = 0; u < y.n; ++u) {
        for (int i = 0; i < 4; ++i) {
            const auto& m = y.cone_members(u, Cone{i});
            for (size_t j = 0; j + 1 < m.size(); ++j) {
                const auto k = edge_key(m[j], m[j + 1]);
                const auto it = std::lower_bound(keys.begin(), keys.end(), k);
                if (it == keys.end() || *it != k)
                    throw Error(Errc::ClassificationContradiction,
                                "consecutive fan members are not Y-adjacent");
                classes[static_cast<size_t>(it - keys.begin())].owners.push_back(
                    {u, Cone{i}, static_cast<int>(j)});
            }
        }
    }

    for (const auto& c : classes) {
        const int cats = (c.middle ? 1 : 0) + (c.dual ? 1 : 0) + (c.canonical() ? 1 : 0);
        if (cats > 1)
            throw Error(Errc::ClassificationContradiction,
                        "edge in more than one of middle/dual/canonical");
        if (c.mutually_single && !y.bidirectional(c.a, c.b))
            throw Error(Errc::ClassificationContradiction,
                        "mutually-single edge is not bi-directional");
    }
    return EdgeClassTable{std::move(keys), std::move(classes)};
}

} // namespace spanner4
