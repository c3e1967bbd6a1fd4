#include "spanner4/anchors.hpp"

#include <algorithm>
#include <map>

namespace spanner4 {

namespace {

int member_pos(const std::vector<NodeId>& m, NodeId v) {
    const auto it = std::find(m.begin(), m.end(), v);
    return it == m.end() ? -1 : static_cast<int>(it - m.begin());
}

} // namespace

void AnchorTable::reindex() {
    anchor_edges_ = {};
    selected_edges_ = {};
    selected_list_.clear();
    for (NodeId u = 0; u < size(); ++u) {
        for (int i = 0; i < 4; ++i) {
            const auto& s = slot(u, Cone{i});
            if (!s.defined()) continue;
            anchor_edges_.insert(edge_key(u, *s.target));
            if (s.selected) selected_edges_.insert(edge_key(u, *s.target));
        }
    }
    anchor_edges_.normalize();
    selected_edges_.normalize();
    for (auto k : selected_edges_.keys())
        selected_list_.push_back({static_cast<NodeId>(k >> 32), static_cast<NodeId>(k & 0xffffffffu)});
}

std::optional<NodeId> choose_anchor(const PointSet& ps, const YaoGraph& y, NodeId u, Cone i) {
    const auto& m = y.cone_members(u, i);
    if (m.empty()) return std::nullopt;
    if (m.size() == 1) {
        const NodeId v = m[0];
        if (y.cone_members(v, cone_of(ps[v], ps[u])).size() == 1) return v;   // mutually-single
        return std::nullopt;
    }
    const int k = static_cast<int>(m.size());
    const int l = member_pos(m, y.out_edge(u, i));
    if (l < 0)
        throw Error(Errc::ClassificationContradiction, "outgoing edge missing from its fan");
    // Walk the maximal uni-directional canonical path ending at v_l, on the
    // side whose edge points into v_l.
    if (l >= 1 && y.unidir_towards(m[static_cast<size_t>(l - 1)], m[static_cast<size_t>(l)])) {
        int s = l;
        while (s > 0 && y.unidir_towards(m[static_cast<size_t>(s - 1)], m[static_cast<size_t>(s)])) --s;
        return m[static_cast<size_t>(s)];
    }
    if (l <= k - 2 && y.unidir_towards(m[static_cast<size_t>(l + 1)], m[static_cast<size_t>(l)])) {
        int s = l;
        while (s < k - 1 && y.unidir_towards(m[static_cast<size_t>(s + 1)], m[static_cast<size_t>(s)])) ++s;
        return m[static_cast<size_t>(s)];
    }
    return m[static_cast<size_t>(l)];
}

AnchorTable choose_all_anchors(const PointSet& ps, const YaoGraph& y) {
    AnchorTable a(y.n);
    for (NodeId u = 0; u < y.n; ++u)
        for (int i = 0; i < 4; ++i)
            a.slot(u, Cone{i}).target = choose_anchor(ps, y, u, Cone{i});
    return a;
}

void classify_anchor_strength(const PointSet& ps, AnchorTable& a) {
    for (NodeId u = 0; u < a.size(); ++u) {
        for (int i = 0; i < 4; ++i) {
            auto& s = a.slot(u, Cone{i});
            if (!s.defined()) continue;
            const NodeId v = *s.target;
            const auto& back = a.slot(v, cone_of(ps[v], ps[u]));
            s.strength = (!back.defined() || *back.target == u) ? AnchorStrength::Strong
                                                                : AnchorStrength::Weak;
        }
    }
}

std::vector<WeakAnchorChain> weak_anchor_chains(const AnchorTable& a, const PointSet& ps) {
    struct SlotRef {
        NodeId u;
        int cone;
        bool operator<(const SlotRef& o) const { return std::tie(u, cone) < std::tie(o.u, o.cone); }
        bool operator==(const SlotRef& o) const = default;
    };
    std::vector<SlotRef> weak;
    for (NodeId u = 0; u < a.size(); ++u)
        for (int i = 0; i < 4; ++i) {
            const auto& s = a.slot(u, Cone{i});
            if (s.defined() && s.strength == AnchorStrength::Weak) weak.push_back({u, i});
        }
    const auto is_weak = [&](NodeId u, Cone c) {
        const auto& s = a.slot(u, c);
        return s.defined() && s.strength == AnchorStrength::Weak;
    };
    // successor of weak anchor (u, i): the anchor chosen by its target in
    // cone i+2. Predecessors must be unique for the chains to partition.
    std::map<SlotRef, SlotRef> pred;
    for (const auto& w : weak) {
        const NodeId t = *a.slot(w.u, Cone{w.cone}).target;
        const Cone nc = Cone{w.cone} + 2;
        if (is_weak(t, nc)) {
            const SlotRef succ{t, nc.idx};
            if (auto [it, fresh] = pred.emplace(succ, w); !fresh)
                throw Error(Errc::ChainCycleDetected, "weak anchor with two predecessors");
        }
    }
    std::vector<WeakAnchorChain> chains;
    std::vector<SlotRef> visited;
    for (const auto& head : weak) {
        if (pred.count(head)) continue;
        WeakAnchorChain ch;
        ch.base = Cone{head.cone};
        ch.nodes.push_back(head.u);
        SlotRef cur = head;
        while (true) {
            if (std::find(visited.begin(), visited.end(), cur) != visited.end())
                throw Error(Errc::ChainCycleDetected, "weak anchor revisited");
            visited.push_back(cur);
            const NodeId t = *a.slot(cur.u, Cone{cur.cone}).target;
            ch.nodes.push_back(t);
            const Cone nc = Cone{cur.cone} + 2;
            if (!is_weak(t, nc)) break;
            cur = {t, nc.idx};
        }
        chains.push_back(std::move(ch));
    }
    if (visited.size() != weak.size())
        throw Error(Errc::ChainCycleDetected, "weak anchors not partitioned into chains");
    (void)ps;
    return chains;
}

void select_anchors(AnchorTable& a, const std::vector<WeakAnchorChain>& chains) {
    for (NodeId u = 0; u < a.size(); ++u)
        for (int i = 0; i < 4; ++i) {
            auto& s = a.slot(u, Cone{i});
            if (s.defined() && s.strength == AnchorStrength::Strong) s.selected = true;
        }
    for (const auto& ch : chains) {
        const int k = ch.length();
        for (int e = 0; e < k; ++e) {
            const Cone c = ch.base + (e % 2 == 0 ? 0 : 2);
            auto& s = a.slot(ch.nodes[static_cast<size_t>(e)], c);
            // selection alternates backward from the strong-adjacent end;
            // the final chain edge is never selected
            if (e % 2 == k % 2) s.selected = true;
        }
        if (k % 2 == 1) a.slot(ch.nodes[0], ch.base).start_of_odd_chain = true;
    }
    a.reindex();
}

AnchorsResult build_anchor_table(const PointSet& ps, const YaoGraph& y) {
    AnchorsResult r;
    r.table = choose_all_anchors(ps, y);
    classify_anchor_strength(ps, r.table);
    r.chains = weak_anchor_chains(r.table, ps);
    select_anchors(r.table, r.chains);
    return r;
}

std::vector<NodeId> canonical_path(const YaoGraph& y, NodeId u, Cone i, int s, int r) {
    const auto& m = y.cone_members(u, i);
    const int k = static_cast<int>(m.size());
    if (s < 0 || r < 0 || s >= k || r >= k)
        throw Error(Errc::PositionOutOfRange, "fan position out of range");
    std::vector<NodeId> path;
    const int step = s <= r ? 1 : -1;
    for (int j = s;; j += step) {
        path.push_back(m[static_cast<size_t>(j)]);
        if (j == r) break;
    }
    return path;
}

std::vector<NodeId> maximal_unidir_canonical_path_ending_at(const YaoGraph& y, NodeId u, Cone i,
                                                            int l) {
    const auto& m = y.cone_members(u, i);
    const int k = static_cast<int>(m.size());
    if (l < 0 || l >= k) throw Error(Errc::PositionOutOfRange, "fan position out of range");
    if (l >= 1 && y.unidir_towards(m[static_cast<size_t>(l - 1)], m[static_cast<size_t>(l)])) {
        int s = l;
        while (s > 0 && y.unidir_towards(m[static_cast<size_t>(s - 1)], m[static_cast<size_t>(s)])) --s;
        return canonical_path(y, u, i, s, l);
    }
    if (l <= k - 2 && y.unidir_towards(m[static_cast<size_t>(l + 1)], m[static_cast<size_t>(l)])) {
        int s = l;
        while (s < k - 1 && y.unidir_towards(m[static_cast<size_t>(s + 1)], m[static_cast<size_t>(s)])) ++s;
        return canonical_path(y, u, i, s, l);
    }
    return {m[static_cast<size_t>(l)]};
}

double StandardPath::length(const PointSet& ps) const {
    double len = 0;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) len += dist_l2(ps[nodes[i]], ps[nodes[i + 1]]);
    return len;
}

StandardPath standard_path_1(const PointSet& ps, const YaoGraph& y, const AnchorTable& a,
                             NodeId u, NodeId v) {
    const Cone i = cone_of(ps[u], ps[v]);
    const auto& s = a.slot(u, i);
    if (!s.defined()) throw Error(Errc::AnchorUndefined, "no anchor for this cone");
    const NodeId vp = *s.target;
    const auto& m = y.cone_members(u, i);
    StandardPath p{u, v, 1, {u}};
    if (m.size() == 1) {
        p.nodes.push_back(v);
        return p;
    }
    const auto cp = canonical_path(y, u, i, member_pos(m, vp), member_pos(m, v));
    p.nodes.insert(p.nodes.end(), cp.begin(), cp.end());
    return p;
}

StandardPath standard_path_2(const PointSet& ps, const YaoGraph& y, const AnchorTable& a,
                             NodeId u, NodeId v) {
    const Cone i = cone_of(ps[u], ps[v]);
    const auto& s = a.slot(u, i);
    if (!s.defined()) throw Error(Errc::AnchorUndefined, "no anchor for this cone");
    if (s.selected) {
        StandardPath p = standard_path_1(ps, y, a, u, v);
        p.level = 2;
        return p;
    }
    const NodeId vp = *s.target;
    // v' -> u by its own (selected) anchor, then along u's fan from v' to v.
    const StandardPath back = standard_path_1(ps, y, a, vp, u);
    StandardPath p{u, v, 2, {}};
    p.nodes.assign(back.nodes.rbegin(), back.nodes.rend());
    const auto& m = y.cone_members(u, i);
    const auto cp = canonical_path(y, u, i, member_pos(m, vp), member_pos(m, v));
    p.nodes.insert(p.nodes.end(), cp.begin() + 1, cp.end());
    return p;
}

namespace {

bool assemble_prepath(const PointSet& ps, const YaoGraph& y, const AnchorTable& a,
                      const EdgeSet& host, NodeId u, NodeId v, int d,
                      std::vector<NodeId>& walk, std::vector<Edge>& edges) {
    const StandardPath p = standard_path_2(ps, y, a, u, v);
    bool complete = true;
    for (size_t i = 0; i + 1 < p.nodes.size(); ++i) {
        const NodeId s = p.nodes[i], t = p.nodes[i + 1];
        if (host.contains_edge(s, t)) {
            edges.push_back(make_edge(s, t));
            walk.push_back(t);
            continue;
        }
        if (d <= 1) {
            complete = false;
            continue;
        }
        // Missing edges on a 2-standard path are canonical and expand from
        // either endpoint. Prefer the head of a uni-directional edge (the
        // side whose anchor is always defined); fall back to the other
        // endpoint when that expansion does not close.
        std::vector<std::pair<NodeId, NodeId>> tries;
        if (y.unidir_towards(s, t)) {
            tries = {{t, s}, {s, t}};
        } else if (y.unidir_towards(t, s)) {
            tries = {{s, t}, {t, s}};
        } else {
            const NodeId lo = std::min(s, t), hi = std::max(s, t);
            tries = {{lo, hi}, {hi, lo}};
        }
        bool expanded = false;
        for (auto [src, dst] : tries) {
            if (!a.slot(src, cone_of(ps[src], ps[dst])).defined()) continue;
            std::vector<NodeId> sub{src};
            std::vector<Edge> sub_edges;
            if (!assemble_prepath(ps, y, a, host, src, dst, d - 1, sub, sub_edges)) continue;
            if (sub.front() != s) std::reverse(sub.begin(), sub.end());
            walk.insert(walk.end(), sub.begin() + 1, sub.end());
            edges.insert(edges.end(), sub_edges.begin(), sub_edges.end());
            expanded = true;
            break;
        }
        if (!expanded) complete = false;
    }
    return complete;
}

} // namespace

PrepathResult standard_prepath(const PointSet& ps, const YaoGraph& y, const AnchorTable& a,
                               const EdgeSet& host, NodeId u, NodeId v, int d) {
    PrepathResult r;
    std::vector<NodeId> walk{u};
    const bool complete = assemble_prepath(ps, y, a, host, u, v, d, walk, r.edges);
    if (!complete || walk.empty() || walk.front() != u || walk.back() != v) return r;
    std::vector<NodeId> uniq = walk;
    std::sort(uniq.begin(), uniq.end());
    if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) return r;   // not simple
    r.path = std::move(walk);
    return r;
}

} // namespace spanner4
