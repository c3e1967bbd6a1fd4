#include "spanner4/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "spanner4/delaunay.hpp"
#include "spanner4/pipeline.hpp"

namespace spanner4 {

namespace bounds {
double sqrt2() { return std::sqrt(2.0); }
double one_plus_sqrt2() { return 1.0 + sqrt2(); }
double three_plus_sqrt2_pow6() { return std::pow(3.0 + sqrt2(), 6.0); }
double h4_cutoff_factor() { return one_plus_sqrt2() * three_plus_sqrt2_pow6(); }
double h4_stretch_bound() {
    return std::sqrt(4.0 + 2.0 * sqrt2()) * one_plus_sqrt2() * one_plus_sqrt2() *
           three_plus_sqrt2_pow6();
}
}   // namespace bounds

std::optional<CrossingWitness> check_planarity(const PointSet& ps,
                                               const std::vector<Edge>& edges) {
    const std::int64_t m = static_cast<std::int64_t>(edges.size());
    std::optional<CrossingWitness> found;

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < m; ++i) {
        if (found) continue;
        const auto [a, b] = edges[static_cast<size_t>(i)];
        for (std::int64_t j = i + 1; j < m; ++j) {
            const auto [c, d] = edges[static_cast<size_t>(j)];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_properly_cross(ps[a], ps[b], ps[c], ps[d])) {
#pragma omp critical
                {
                    if (!found || std::make_pair(edges[static_cast<size_t>(i)],
                                                 edges[static_cast<size_t>(j)]) <
                                      std::make_pair(found->e1, found->e2))
                        found = CrossingWitness{edges[static_cast<size_t>(i)],
                                                edges[static_cast<size_t>(j)], false};
                }
            }
        }
        for (NodeId k = 0; k < ps.size(); ++k) {
            if (k == a || k == b) continue;
            if (point_in_open_segment(ps[a], ps[b], ps[k])) {
#pragma omp critical
                {
                    if (!found)
                        found = CrossingWitness{edges[static_cast<size_t>(i)], {k, kNone}, true};
                }
            }
        }
    }
    return found;
}

namespace {

std::vector<std::vector<std::pair<NodeId, double>>> weighted_adj(const PointSet& ps,
                                                                 const std::vector<Edge>& edges) {
    std::vector<std::vector<std::pair<NodeId, double>>> adj(static_cast<size_t>(ps.size()));
    for (auto [a, b] : edges) {
        const double w = dist_l2(ps[a], ps[b]);
        adj[static_cast<size_t>(a)].push_back({b, w});
        adj[static_cast<size_t>(b)].push_back({a, w});
    }
    return adj;
}

std::vector<double> dijkstra(const std::vector<std::vector<std::pair<NodeId, double>>>& adj,
                             NodeId src) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(adj.size(), inf);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
    dist[static_cast<size_t>(src)] = 0;
    q.push({0, src});
    while (!q.empty()) {
        const auto [d, u] = q.top();
        q.pop();
        if (d > dist[static_cast<size_t>(u)]) continue;
        for (const auto& [v, w] : adj[static_cast<size_t>(u)]) {
            if (d + w < dist[static_cast<size_t>(v)]) {
                dist[static_cast<size_t>(v)] = d + w;
                q.push({d + w, v});
            }
        }
    }
    return dist;
}

} // namespace

StretchReport stretch_factor(const PointSet& ps, const std::vector<Edge>& edges,
                             const std::string& tag) {
    StretchReport rep;
    rep.graph = tag;
    const NodeId n = ps.size();
    if (n <= 1) return rep;
    const auto adj = weighted_adj(ps, edges);

    std::vector<double> best(static_cast<size_t>(n), 1.0);
    std::vector<NodeId> best_to(static_cast<size_t>(n), kNone);
    bool disconnected = false;

#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t s = 0; s < n; ++s) {
        const auto dist = dijkstra(adj, static_cast<NodeId>(s));
        double mx = 1.0;
        NodeId arg = kNone;
        for (NodeId t = static_cast<NodeId>(s) + 1; t < n; ++t) {
            if (std::isinf(dist[static_cast<size_t>(t)])) {
#pragma omp critical
                disconnected = true;
                continue;
            }
            const double r = dist[static_cast<size_t>(t)] / dist_l2(ps[static_cast<NodeId>(s)], ps[t]);
            if (r > mx) {
                mx = r;
                arg = t;
            }
        }
        best[static_cast<size_t>(s)] = mx;
        best_to[static_cast<size_t>(s)] = arg;
    }
    if (disconnected) throw Error(Errc::DisconnectedGraph, "stretch undefined");

    for (NodeId s = 0; s < n; ++s) {
        if (best[static_cast<size_t>(s)] > rep.max_ratio) {
            rep.max_ratio = best[static_cast<size_t>(s)];
            rep.argmax = {s, best_to[static_cast<size_t>(s)]};
        }
    }
    return rep;
}

double stretch_factor_naive(const PointSet& ps, const std::vector<Edge>& edges) {
    const size_t n = static_cast<size_t>(ps.size());
    if (n <= 1) return 1.0;
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [a, b] : edges) {
        const double w = dist_l2(ps[a], ps[b]);
        d[static_cast<size_t>(a)][static_cast<size_t>(b)] = w;
        d[static_cast<size_t>(b)][static_cast<size_t>(a)] = w;
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    double mx = 1.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (std::isinf(d[i][j])) throw Error(Errc::DisconnectedGraph, "stretch undefined");
            mx = std::max(mx, d[i][j] / dist_l2(ps[static_cast<NodeId>(i)], ps[static_cast<NodeId>(j)]));
        }
    return mx;
}

std::vector<PathViolation> verify_yao_vs_t(const PointSet& ps, const Triangulation& t,
                                           const YaoGraph& y) {
    std::vector<PathViolation> out;
    const auto adj = weighted_adj(ps, y.edges);
    const double bound = bounds::one_plus_sqrt2();
    std::vector<std::vector<NodeId>> targets(static_cast<size_t>(t.n));
    for (auto [a, b] : t.edges) targets[static_cast<size_t>(a)].push_back(b);

#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t s = 0; s < t.n; ++s) {
        if (targets[static_cast<size_t>(s)].empty()) continue;
        const auto dist = dijkstra(adj, static_cast<NodeId>(s));
        for (NodeId b : targets[static_cast<size_t>(s)]) {
            const double d2 = dist_l2(ps[static_cast<NodeId>(s)], ps[b]);
            const double r = dist[static_cast<size_t>(b)] / d2;
            if (r > bound * (1 + bounds::kRelTol)) {
#pragma omp critical
                out.push_back({{static_cast<NodeId>(s), b}, r, bound, "yao-vs-t"});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PathViolation& a, const PathViolation& b) { return a.edge < b.edge; });
    return out;
}

std::vector<PathViolation> verify_standard_path_bounds(const PointSet& ps, const YaoGraph& y,
                                                       const AnchorTable& a,
                                                       const SpannerGraph& stage) {
    std::vector<PathViolation> out;
    const double bound = bounds::three_plus_sqrt2_pow6();
    const std::int64_t m = static_cast<std::int64_t>(y.edges.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t e = 0; e < m; ++e) {
        const auto [p, q] = y.edges[static_cast<size_t>(e)];
        const double d2 = dist_l2(ps[p], ps[q]);
        bool ok = false;
        double best = std::numeric_limits<double>::infinity();
        for (auto [s, t] : {std::pair{p, q}, std::pair{q, p}}) {
            if (!a.slot(s, cone_of(ps[s], ps[t])).defined()) continue;
            const auto r = standard_prepath(ps, y, a, stage.edge_set, s, t, 3);
            if (!r.is_path()) continue;
            double len = 0;
            for (size_t i = 0; i + 1 < r.path->size(); ++i)
                len += dist_l2(ps[(*r.path)[i]], ps[(*r.path)[i + 1]]);
            best = std::min(best, len / d2);
            if (len <= bound * d2 * (1 + bounds::kRelTol)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
#pragma omp critical
            out.push_back({{p, q}, best, bound, "6-standard path missing or too long"});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PathViolation& a2, const PathViolation& b) { return a2.edge < b.edge; });
    return out;
}

std::vector<PathViolation> verify_h4_cutoff_bounds(const PointSet& ps, const SpannerGraph& h4) {
    std::vector<PathViolation> out;
    const double bound = bounds::h4_cutoff_factor();
    const auto adj = weighted_adj(ps, h4.all_edges());
    for (const auto& [cut, owner] : h4.cutoffs) {
        const auto dist = dijkstra(adj, owner);
        const double d2 = dist_l2(ps[owner], ps[cut]);
        const double r = dist[static_cast<size_t>(cut)] / d2;
        if (!(r <= bound * (1 + bounds::kRelTol)))
            out.push_back({{owner, cut}, r, bound, "cut-off node path"});
    }
    return out;
}

const CheckResult* Certificate::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

void record(Certificate& cert, const std::string& name, bool pass, const std::string& detail = "") {
    cert.checks.push_back({name, pass, detail});
}

} // namespace

Certificate full_certificate(const PointSet& ps) {
    Certificate cert;
    const auto gp = ps.general_position();
    record(cert, "general-position", gp.ok(),
           gp.ok() ? ""
                   : std::to_string(gp.duplicate_x.size()) + " duplicate x, " +
                         std::to_string(gp.duplicate_y.size()) + " duplicate y");
    if (!gp.ok())
        cert.warnings.push_back("GeneralPositionViolation: shared coordinates; construction "
                                "proceeds and fails only if a degenerate pair is consulted");

    Pipeline p;
    try {
        p = run_pipeline(ps);
    } catch (const Error& e) {
        record(cert, "pipeline", false, e.what());
        cert.ok = false;
        return cert;
    }
    record(cert, "pipeline", true);

    const NodeId n = ps.size();
    // triangulation structure
    try {
        bool tri_ok = true;
        std::string note;
        if (!is_connected(n, p.t.edges)) {
            tri_ok = false;
            note = "disconnected";
        } else if (n >= 3 && static_cast<std::int64_t>(p.t.edges.size()) > 3 * n - 6) {
            tri_ok = false;
            note = "edge count above 3n-6";
        } else if (n >= 2) {
            const auto faces = extract_faces(ps, p.t);
            const std::int64_t f = static_cast<std::int64_t>(faces.walks.size());
            if (n - static_cast<std::int64_t>(p.t.edges.size()) + f != 2) {
                tri_ok = false;
                note = "Euler formula fails";
            }
            for (size_t i = 0; i < faces.walks.size() && tri_ok; ++i) {
                if (static_cast<int>(i) == faces.outer) continue;
                if (faces.walks[i].size() != 3) {
                    tri_ok = false;
                    note = "non-triangular interior face";
                }
            }
        }
        record(cert, "triangulation-structure", tri_ok, note);
    } catch (const Error& e) {
        record(cert, "triangulation-structure", false, e.what());
    }
    record(cert, "t-planarity", !check_planarity(ps, p.t.edges).has_value());

    bool contained = true;
    for (auto [a, b] : p.y.edges)
        if (!p.t.has_edge(a, b)) contained = false;
    record(cert, "yao-subset-of-t", contained);

    record(cert, "h8-max-degree-8", max_degree(n, p.h8.graph.edges) <= 8);
    for (NodeId u = 0; u < n; ++u)
        for (int i = 0; i < 4; ++i) {
            const int c = p.h8.ledger.at(u, Cone{i});
            cert.max_cone_charge_h8 = std::max(cert.max_cone_charge_h8, c);
            if (c == 2) ++cert.charge2_cones_h8;
        }
    record(cert, "h8-cone-charge-le-2", cert.max_cone_charge_h8 <= 2);

    const auto h4_edges = p.h4.all_edges();
    cert.max_degree_h4 = max_degree(n, h4_edges);
    cert.degree_histogram_h4.assign(static_cast<size_t>(cert.max_degree_h4) + 1, 0);
    {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (auto [a, b] : h4_edges) {
            ++deg[static_cast<size_t>(a)];
            ++deg[static_cast<size_t>(b)];
        }
        for (const int d : deg) ++cert.degree_histogram_h4[static_cast<size_t>(d)];
    }
    record(cert, "h4-max-degree-4", cert.max_degree_h4 <= 4);
    cert.crossing = check_planarity(ps, h4_edges);
    record(cert, "h4-planarity", !cert.crossing.has_value());

    record(cert, "yao-vs-t-paths", verify_yao_vs_t(ps, p.t, p.y).empty());
    record(cert, "h8-6-standard-paths",
           verify_standard_path_bounds(ps, p.y, p.anchors, p.h8.graph).empty());
    record(cert, "h6-6-standard-paths",
           verify_standard_path_bounds(ps, p.y, p.anchors, p.h6).empty());
    record(cert, "h4-cutoff-paths", verify_h4_cutoff_bounds(ps, p.h4).empty());

    try {
        const auto st = stretch_factor(ps, p.h4.all_edges(), "h4");
        cert.stretch_h4 = st.max_ratio;
        record(cert, "h4-stretch-within-bound",
               st.max_ratio <= bounds::h4_stretch_bound() * (1 + bounds::kRelTol));
        if (st.max_ratio > 10.0)
            cert.warnings.push_back("measured H4 stretch above 10 (soft expectation)");
    } catch (const Error& e) {
        record(cert, "h4-stretch-within-bound", false, e.what());
    }

    cert.ok = true;
    for (const auto& c : cert.checks)
        if (c.name != "general-position" && !c.pass) cert.ok = false;
    return cert;
}

} // namespace spanner4
