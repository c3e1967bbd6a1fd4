#pragma once

#include <array>
#include <optional>
#include <vector>

#include "spanner4/delaunay.hpp"
#include "spanner4/edge_set.hpp"
#include "spanner4/geometry.hpp"

namespace spanner4 {

inline constexpr NodeId kNone = -1;

/// CCW-ordered fan of a node inside one of its cones (defined for >= 2 edges).
struct Fan {
    NodeId owner = kNone;
    Cone cone;
    std::vector<NodeId> members;   // v_1 .. v_k, counter-clockwise
};

/// Directed cone graph stored as an overlay on the triangulation, so the
/// containment in T is structural.
struct YaoGraph {
    NodeId n = 0;
    std::vector<std::array<NodeId, 4>> out;                 // per node per cone
    std::vector<std::array<std::vector<NodeId>, 4>> members; // CCW, all Y edges in cone
    std::vector<Edge> edges;                                 // undirected, canonical order
    EdgeSet edge_set;
    EdgeSet directed;                                        // dir_key(tail, head)

    NodeId out_edge(NodeId v, Cone i) const { return out[static_cast<size_t>(v)][static_cast<size_t>(i.idx)]; }
    bool has_dir(NodeId a, NodeId b) const { return directed.contains(dir_key(a, b)); }
    bool unidirectional(NodeId a, NodeId b) const { return has_dir(a, b) != has_dir(b, a); }
    bool unidir_towards(NodeId a, NodeId b) const { return has_dir(a, b) && !has_dir(b, a); }
    bool bidirectional(NodeId a, NodeId b) const { return has_dir(a, b) && has_dir(b, a); }
    const std::vector<NodeId>& cone_members(NodeId u, Cone i) const {
        return members[static_cast<size_t>(u)][static_cast<size_t>(i.idx)];
    }
};

YaoGraph build_y4(const PointSet& ps, const Triangulation& t);

std::optional<Fan> fan(const YaoGraph& y, NodeId u, Cone i);

/// Classification flags for one undirected Y edge lying in cone(a) of a and
/// its opposite at b.
struct EdgeClass {
    NodeId a = kNone, b = kNone;   // a < b
    Cone cone_at_a, cone_at_b;
    int fan_size_a = 0, fan_size_b = 0;
    int pos_a = -1, pos_b = -1;    // position within the cone member list
    bool mutually_single = false;
    bool dual = false;
    bool middle = false;
    struct Owner {
        NodeId node;
        Cone cone;
        int pos;                   // edge joins fan positions pos, pos+1
    };
    std::vector<Owner> owners;     // nodes this edge is canonical for
    bool canonical() const { return !owners.empty(); }
    bool first_at_a() const { return fan_size_a >= 2 && pos_a == 0; }
    bool last_at_a() const { return fan_size_a >= 2 && pos_a == fan_size_a - 1; }
    bool first_at_b() const { return fan_size_b >= 2 && pos_b == 0; }
    bool last_at_b() const { return fan_size_b >= 2 && pos_b == fan_size_b - 1; }
};

class EdgeClassTable {
public:
    EdgeClassTable() = default;
    EdgeClassTable(std::vector<std::uint64_t> keys, std::vector<EdgeClass> classes)
        : keys_(std::move(keys)), classes_(std::move(classes)) {}

    const EdgeClass& at(NodeId a, NodeId b) const;
    const std::vector<EdgeClass>& all() const { return classes_; }

private:
    std::vector<std::uint64_t> keys_;    // sorted, parallel to classes_
    std::vector<EdgeClass> classes_;
};

/// Labels every Y edge; throws ClassificationContradiction if the middle /
/// dual / canonical categories fail to be mutually exclusive.
EdgeClassTable classify_edges(const PointSet& ps, const YaoGraph& y);

} // namespace spanner4
