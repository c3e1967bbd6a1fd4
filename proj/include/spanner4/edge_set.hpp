#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "spanner4/geometry.hpp"

namespace spanner4 {

using Edge = std::pair<NodeId, NodeId>;

inline Edge make_edge(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::uint64_t edge_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

inline std::uint64_t dir_key(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

/// Sorted-vector set of undirected (or directed) edge keys. Call normalize()
/// after a batch of inserts before querying.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<std::uint64_t> keys) : keys_(std::move(keys)) { normalize(); }

    void insert(std::uint64_t k) { keys_.push_back(k); }
    void normalize() {
        std::sort(keys_.begin(), keys_.end());
        keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    }
    bool contains(std::uint64_t k) const {
        return std::binary_search(keys_.begin(), keys_.end(), k);
    }
    bool contains_edge(NodeId a, NodeId b) const { return contains(edge_key(a, b)); }
    size_t size() const { return keys_.size(); }
    const std::vector<std::uint64_t>& keys() const { return keys_; }

private:
    std::vector<std::uint64_t> keys_;
};

inline std::vector<Edge> sorted_edges(const std::vector<Edge>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) out.push_back(make_edge(a, b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace spanner4
