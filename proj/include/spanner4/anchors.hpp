#pragma once

#include <array>
#include <optional>
#include <vector>

#include "spanner4/edge_set.hpp"
#include "spanner4/geometry.hpp"
#include "spanner4/yao.hpp"

namespace spanner4 {

enum class AnchorStrength { Strong, Weak };

struct AnchorSlot {
    std::optional<NodeId> target;
    AnchorStrength strength = AnchorStrength::Strong;
    bool selected = false;
    bool start_of_odd_chain = false;
    bool defined() const { return target.has_value(); }
};

struct WeakAnchorChain {
    std::vector<NodeId> nodes;   // w_0 .. w_k
    Cone base;                   // cone of w_0's choice; alternates with base+2
    int length() const { return static_cast<int>(nodes.size()) - 1; }
};

class AnchorTable {
public:
    explicit AnchorTable(NodeId n) : slots_(static_cast<size_t>(n)) {}
    AnchorTable() = default;

    AnchorSlot& slot(NodeId u, Cone i) { return slots_[static_cast<size_t>(u)][static_cast<size_t>(i.idx)]; }
    const AnchorSlot& slot(NodeId u, Cone i) const {
        return slots_[static_cast<size_t>(u)][static_cast<size_t>(i.idx)];
    }
    NodeId size() const { return static_cast<NodeId>(slots_.size()); }

    /// Rebuilds the chosen / selected edge indexes from the slots.
    void reindex();
    bool is_anchor_edge(NodeId a, NodeId b) const { return anchor_edges_.contains_edge(a, b); }
    bool is_selected_edge(NodeId a, NodeId b) const { return selected_edges_.contains_edge(a, b); }
    const std::vector<Edge>& selected_edges() const { return selected_list_; }

private:
    std::vector<std::array<AnchorSlot, 4>> slots_;
    EdgeSet anchor_edges_;
    EdgeSet selected_edges_;
    std::vector<Edge> selected_list_;
};

/// The anchor chosen by u in cone i, if any. Absent exactly when the cone
/// holds one edge whose far endpoint has a fan in the opposite cone.
std::optional<NodeId> choose_anchor(const PointSet& ps, const YaoGraph& y, NodeId u, Cone i);

AnchorTable choose_all_anchors(const PointSet& ps, const YaoGraph& y);
void classify_anchor_strength(const PointSet& ps, AnchorTable& a);
std::vector<WeakAnchorChain> weak_anchor_chains(const AnchorTable& a, const PointSet& ps);
void select_anchors(AnchorTable& a, const std::vector<WeakAnchorChain>& chains);

struct AnchorsResult {
    AnchorTable table;
    std::vector<WeakAnchorChain> chains;
};

/// choose + classify + chain + select, reindexed and ready for the spanner
/// stages.
AnchorsResult build_anchor_table(const PointSet& ps, const YaoGraph& y);

/// Fan sub-path between positions s and r of the fan of u in cone i
/// (inclusive, in fan order; reversed when s > r).
std::vector<NodeId> canonical_path(const YaoGraph& y, NodeId u, Cone i, int s, int r);

/// Longest fan sub-path of uni-directional edges forming a directed path
/// that ends at position l.
std::vector<NodeId> maximal_unidir_canonical_path_ending_at(const YaoGraph& y, NodeId u, Cone i,
                                                            int l);

struct StandardPath {
    NodeId from = kNone, to = kNone;
    int level = 0;
    std::vector<NodeId> nodes;
    double length(const PointSet& ps) const;
};

/// Anchor edge of u followed by the canonical path to v.
StandardPath standard_path_1(const PointSet& ps, const YaoGraph& y, const AnchorTable& a,
                             NodeId u, NodeId v);

/// Uses only selected anchors; falls back through the far anchor when the
/// chosen one is unselected.
StandardPath standard_path_2(const PointSet& ps, const YaoGraph& y, const AnchorTable& a,
                             NodeId u, NodeId v);

struct PrepathResult {
    std::optional<std::vector<NodeId>> path;   // simple u..v walk when assembled
    std::vector<Edge> edges;                   // host edges gathered (multiset order)
    bool is_path() const { return path.has_value(); }
};

/// Recursive pre-path of level 2d in the host edge set: host edges of the
/// 2-standard path plus, below level 1, expansions of missing canonical
/// edges. The host must contain all selected anchors.
PrepathResult standard_prepath(const PointSet& ps, const YaoGraph& y, const AnchorTable& a,
                               const EdgeSet& host, NodeId u, NodeId v, int d);

} // namespace spanner4
