#include "spanner4/spanner.hpp"

#include <algorithm>
#include <map>

#include "spanner4/verify.hpp"

namespace spanner4 {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::H8: return "h8";
        case Stage::H6: return "h6";
        case Stage::H4: return "h4";
    }
    return "?";
}

std::vector<Edge> SpannerGraph::all_edges() const {
    std::vector<Edge> out = edges;
    out.insert(out.end(), shortcuts.begin(), shortcuts.end());
    return sorted_edges(out);
}

void SpannerGraph::finalize() {
    edges = sorted_edges(edges);
    shortcuts = sorted_edges(shortcuts);
    std::sort(cutoffs.begin(), cutoffs.end());
    edge_set = {};
    all_edge_set = {};
    for (auto [a, b] : edges) edge_set.insert(edge_key(a, b));
    edge_set.normalize();
    for (auto [a, b] : all_edges()) all_edge_set.insert(edge_key(a, b));
    all_edge_set.normalize();
}

int ChargeLedger::node_total(NodeId u) const {
    const auto& c = charge[static_cast<size_t>(u)];
    return c[0] + c[1] + c[2] + c[3];
}

namespace {

// Non-anchor uni-directional canonical edge of the given set, directed t->h.
bool na_udc(const YaoGraph& y, const AnchorTable& a, const EdgeSet& in, NodeId t, NodeId h) {
    return in.contains_edge(t, h) && !a.is_anchor_edge(t, h) && y.unidir_towards(t, h);
}

bool start_of_odd_chosen_by(const PointSet& ps, const AnchorTable& a, NodeId v, NodeId tgt) {
    const auto& s = a.slot(v, cone_of(ps[v], ps[tgt]));
    return s.defined() && s.start_of_odd_chain && *s.target == tgt;
}

} // namespace

H8Result build_h8(const PointSet& ps, const YaoGraph& y, const EdgeClassTable& cls,
                  const AnchorTable& a) {
    std::vector<Edge> edges = a.selected_edges();

    for (NodeId u = 0; u < y.n; ++u) {
        for (int ci = 0; ci < 4; ++ci) {
            const auto& m = y.cone_members(u, Cone{ci});
            const int k = static_cast<int>(m.size());
            if (k < 2) continue;
            for (int j = 0; j + 1 < k; ++j) {
                const NodeId va = m[static_cast<size_t>(j)], vb = m[static_cast<size_t>(j + 1)];
                if (!y.unidirectional(va, vb)) continue;
                bool excluded = false;
                // first / last canonical edge oriented into the fan end whose
                // fan edge is dual and not a start-of-odd-chain choice
                if (j == 0 && y.unidir_towards(vb, va)) {
                    excluded = cls.at(va, u).dual && !start_of_odd_chosen_by(ps, a, va, u) &&
                               !a.is_anchor_edge(va, vb);
                }
                if (j == k - 2 && y.unidir_towards(va, vb)) {
                    excluded = excluded ||
                               (cls.at(vb, u).dual && !start_of_odd_chosen_by(ps, a, vb, u) &&
                                !a.is_anchor_edge(va, vb));
                }
                if (!excluded) edges.push_back(make_edge(va, vb));
            }
        }
    }

    H8Result r;
    r.graph.stage = Stage::H8;
    r.graph.edges = std::move(edges);
    r.graph.finalize();
    r.ledger = compute_charges(ps, y, cls, a, r.graph);
    for (NodeId u = 0; u < y.n; ++u)
        for (int i = 0; i < 4; ++i)
            if (r.ledger.at(u, Cone{i}) > 2)
                throw Error(Errc::ChargeOverflow, "cone charge exceeds 2");
    return r;
}

ChargeLedger compute_charges(const PointSet& ps, const YaoGraph& y, const EdgeClassTable& cls,
                             const AnchorTable& a, const SpannerGraph& g) {
    ChargeLedger led;
    led.charge.assign(static_cast<size_t>(y.n), {0, 0, 0, 0});
    const auto add = [&](NodeId u, Cone c) {
        ++led.charge[static_cast<size_t>(u)][static_cast<size_t>(c.idx)];
    };
    for (auto [p, q] : g.edges) {
        if (a.is_selected_edge(p, q)) {
            add(p, cone_of(ps[p], ps[q]));
            add(q, cone_of(ps[q], ps[p]));
            continue;
        }
        const NodeId t = y.unidir_towards(p, q) ? p : q;
        const NodeId h = t == p ? q : p;
        if (!y.unidir_towards(t, h))
            throw Error(Errc::ClassificationContradiction,
                        "stage edge is neither a selected anchor nor uni-directional");
        const auto& c = cls.at(p, q);
        if (c.owners.size() != 1)
            throw Error(Errc::ClassificationContradiction,
                        "uni-directional stage edge without a unique canonical owner");
        add(t, cone_of(ps[t], ps[h]));
        add(h, cone_of(ps[h], ps[c.owners[0].node]));
    }
    for (auto [p, q] : g.shortcuts) {
        add(p, cone_of(ps[p], ps[q]));
        add(q, cone_of(ps[q], ps[p]));
    }
    return led;
}

std::vector<DuplicateChain> duplicate_chains(const PointSet& ps, const YaoGraph& y,
                                             const EdgeClassTable& cls, const AnchorTable& a,
                                             const SpannerGraph& h8) {
    (void)ps;
    (void)cls;
    // duplicate edge (directed) -> its successor (directed)
    std::map<std::pair<NodeId, NodeId>, std::pair<NodeId, NodeId>> succ;
    for (NodeId u = 0; u < y.n; ++u) {
        for (int ci = 0; ci < 4; ++ci) {
            const auto& m = y.cone_members(u, Cone{ci});
            const int k = static_cast<int>(m.size());
            if (k < 2) continue;
            const NodeId v1 = m[0], v2 = m[1];
            if (na_udc(y, a, h8.edge_set, v1, u) && na_udc(y, a, h8.edge_set, v2, v1))
                succ[{v2, v1}] = {v1, u};
            const NodeId vk = m[static_cast<size_t>(k - 1)], vk1 = m[static_cast<size_t>(k - 2)];
            if (na_udc(y, a, h8.edge_set, vk, u) && na_udc(y, a, h8.edge_set, vk1, vk))
                succ[{vk1, vk}] = {vk, u};
        }
    }

    // every non-anchor uni-directional canonical H8 edge, directed
    std::vector<std::pair<NodeId, NodeId>> pool;
    for (auto [p, q] : h8.edges) {
        if (a.is_anchor_edge(p, q)) continue;
        if (y.unidir_towards(p, q))
            pool.push_back({p, q});
        else if (y.unidir_towards(q, p))
            pool.push_back({q, p});
        else
            throw Error(Errc::ClassificationContradiction,
                        "non-anchor H8 edge is not uni-directional");
    }

    std::map<std::pair<NodeId, NodeId>, std::pair<NodeId, NodeId>> pred;
    for (const auto& [d, s] : succ) {
        if (auto [it, fresh] = pred.emplace(s, d); !fresh)
            throw Error(Errc::ChainCycleDetected, "chain successor with two predecessors");
    }

    std::vector<DuplicateChain> chains;
    size_t covered = 0;
    for (const auto& e : pool) {
        if (succ.count(e)) continue;   // duplicate edges are interior links
        DuplicateChain ch;
        std::vector<std::pair<NodeId, NodeId>> rev{e};
        auto cur = e;
        while (true) {
            const auto it = pred.find(cur);
            if (it == pred.end()) break;
            cur = it->second;
            if (std::find(rev.begin(), rev.end(), cur) != rev.end())
                throw Error(Errc::ChainCycleDetected, "duplicate chain forms a cycle");
            rev.push_back(cur);
        }
        ch.nodes.push_back(rev.back().first);
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) ch.nodes.push_back(it->second);
        covered += rev.size();
        chains.push_back(std::move(ch));
    }
    if (covered != pool.size())
        throw Error(Errc::ChainCycleDetected, "duplicate edges not partitioned into chains");
    std::sort(chains.begin(), chains.end(),
              [](const DuplicateChain& x, const DuplicateChain& y2) { return x.nodes < y2.nodes; });
    return chains;
}

SpannerGraph build_h6(const SpannerGraph& h8, const std::vector<DuplicateChain>& chains) {
    EdgeSet removed;
    for (const auto& ch : chains) {
        const int k = ch.length();
        for (int idx = k - 1; idx >= 1; idx -= 2)
            removed.insert(edge_key(ch.nodes[static_cast<size_t>(idx - 1)],
                                    ch.nodes[static_cast<size_t>(idx)]));
    }
    removed.normalize();
    SpannerGraph h6;
    h6.stage = Stage::H6;
    for (auto [a, b] : h8.edges)
        if (!removed.contains_edge(a, b)) h6.edges.push_back({a, b});
    h6.finalize();
    return h6;
}

std::vector<EdgePair> find_edge_pairs(const PointSet& ps, const YaoGraph& y,
                                      const EdgeClassTable& cls, const AnchorTable& a,
                                      const SpannerGraph& stage, const SpannerGraph& h8) {
    (void)ps;
    (void)cls;
    std::vector<EdgePair> pairs;
    for (NodeId u = 0; u < y.n; ++u) {
        for (int ci = 0; ci < 4; ++ci) {
            const auto& m = y.cone_members(u, Cone{ci});
            const int k = static_cast<int>(m.size());
            for (int r = 1; r + 1 < k; ++r) {
                const NodeId vl = m[static_cast<size_t>(r - 1)];
                const NodeId vm = m[static_cast<size_t>(r)];
                const NodeId vr = m[static_cast<size_t>(r + 1)];
                if (!na_udc(y, a, stage.edge_set, vl, vm)) continue;
                if (!na_udc(y, a, stage.edge_set, vr, vm)) continue;
                if (h8.edge_set.contains_edge(u, vm))
                    throw Error(Errc::ClassificationContradiction,
                                "middle edge of a charged pair present in H8");
                pairs.push_back({u, Cone{ci}, vl, vm, vr});
            }
        }
    }
    return pairs;
}

SpannerGraph build_h4(const PointSet& ps, const SpannerGraph& h6,
                      const std::vector<EdgePair>& pairs) {
    EdgeSet removed;
    for (const auto& p : pairs) {
        removed.insert(edge_key(p.left, p.mid));
        removed.insert(edge_key(p.right, p.mid));
    }
    removed.normalize();

    SpannerGraph h4;
    h4.stage = Stage::H4;
    for (auto [a, b] : h6.edges)
        if (!removed.contains_edge(a, b)) h4.edges.push_back({a, b});
    for (const auto& p : pairs) {
        h4.shortcuts.push_back(make_edge(p.left, p.right));
        h4.cutoffs.push_back({p.mid, p.owner});
    }
    h4.finalize();

    const auto all = h4.all_edges();
    if (max_degree(ps.size(), all) > 4)
        throw Error(Errc::DegreeOverflow, "H4 degree exceeds 4");
    if (const auto witness = check_planarity(ps, all))
        throw Error(Errc::PlanarityViolation, "H4 edges cross");
    return h4;
}

int max_degree(NodeId n, const std::vector<Edge>& edges) {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (auto [a, b] : edges) {
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

} // namespace spanner4
