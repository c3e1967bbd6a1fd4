#pragma once

#include <array>
#include <vector>

#include "spanner4/anchors.hpp"
#include "spanner4/edge_set.hpp"
#include "spanner4/geometry.hpp"
#include "spanner4/yao.hpp"

namespace spanner4 {

enum class Stage { H8, H6, H4 };

const char* stage_name(Stage s);

/// One staged spanner snapshot. Shortcut edges (H4 only) are kept apart from
/// the Y-subgraph edges; cutoffs map a cut-off node to the fan owner it was
/// cut off from.
struct SpannerGraph {
    Stage stage = Stage::H8;
    std::vector<Edge> edges;
    std::vector<Edge> shortcuts;
    std::vector<std::pair<NodeId, NodeId>> cutoffs;
    EdgeSet edge_set;        // edges only
    EdgeSet all_edge_set;    // edges + shortcuts

    std::vector<Edge> all_edges() const;
    void finalize();
};

struct ChargeLedger {
    std::vector<std::array<int, 4>> charge;
    int at(NodeId u, Cone i) const { return charge[static_cast<size_t>(u)][static_cast<size_t>(i.idx)]; }
    int node_total(NodeId u) const;
};

struct EdgePair {
    NodeId owner = kNone;
    Cone cone;
    NodeId left = kNone, mid = kNone, right = kNone;   // wings point into mid
};

struct DuplicateChain {
    std::vector<NodeId> nodes;   // w_1 .. w_{k+1}; (w_k, w_{k+1}) is the end edge
    Edge end_edge() const {
        return make_edge(nodes[nodes.size() - 2], nodes[nodes.size() - 1]);
    }
    int length() const { return static_cast<int>(nodes.size()) - 1; }
};

struct H8Result {
    SpannerGraph graph;
    ChargeLedger ledger;
};

/// Selected anchors plus the uni-directional canonical fan edges, minus the
/// two per-fan exclusion cases. Throws ChargeOverflow if any cone exceeds
/// charge 2.
H8Result build_h8(const PointSet& ps, const YaoGraph& y, const EdgeClassTable& cls,
                  const AnchorTable& a);

/// Charges each stage edge to one cone per endpoint: containing cone for
/// selected anchors and at the tail of a canonical edge, the fan owner's
/// cone at its head; shortcuts charge their containing cones.
ChargeLedger compute_charges(const PointSet& ps, const YaoGraph& y, const EdgeClassTable& cls,
                             const AnchorTable& a, const SpannerGraph& g);

/// Partition of the non-anchor uni-directional canonical H8 edges into
/// duplicate chains, each closed by its unique non-duplicate end edge.
std::vector<DuplicateChain> duplicate_chains(const PointSet& ps, const YaoGraph& y,
                                             const EdgeClassTable& cls, const AnchorTable& a,
                                             const SpannerGraph& h8);

/// Removes every other chain edge walking back from the end edge.
SpannerGraph build_h6(const SpannerGraph& h8, const std::vector<DuplicateChain>& chains);

/// Triples of consecutive fan members whose wing edges are non-anchor
/// uni-directional canonical edges of the stage pointing into the middle.
std::vector<EdgePair> find_edge_pairs(const PointSet& ps, const YaoGraph& y,
                                      const EdgeClassTable& cls, const AnchorTable& a,
                                      const SpannerGraph& stage, const SpannerGraph& h8);

/// Replaces each edge pair by a straight shortcut between its wing tips and
/// records the cut-off node. Certifies max degree <= 4 and planarity.
SpannerGraph build_h4(const PointSet& ps, const SpannerGraph& h6,
                      const std::vector<EdgePair>& pairs);

int max_degree(NodeId n, const std::vector<Edge>& edges);

} // namespace spanner4
