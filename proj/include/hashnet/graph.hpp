#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hashnet {

using NodeIndex = std::uint32_t;

/// Compressed adjacency: neighbors of v are targets[offsets[v] .. offsets[v+1]),
/// sorted ascending by node index.
struct Adjacency {
    std::vector<std::size_t> offsets{0};
    std::vector<NodeIndex> targets;

    std::size_t node_count() const { return offsets.size() - 1; }
    std::span<const NodeIndex> operator[](NodeIndex v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
    std::size_t degree(NodeIndex v) const { return offsets[v + 1] - offsets[v]; }
};

/// Immutable directed simple graph over string node ids.
///
/// Nodes are indexed in insertion order. There are no self-loops and no
/// parallel edges; out- and in-adjacency are kept consistent by construction.
/// Safe for concurrent readers.
class DirectedGraph {
public:
    DirectedGraph() = default;

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return out_.targets.size(); }
    bool empty() const { return ids_.empty(); }

    const std::vector<std::string> &node_ids() const { return ids_; }
    const std::string &id(NodeIndex v) const { return ids_[v]; }
    std::optional<NodeIndex> find(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id).has_value(); }

    const Adjacency &out() const { return out_; }
    const Adjacency &in() const { return in_; }
    std::span<const NodeIndex> out_neighbors(NodeIndex v) const { return out_[v]; }
    std::span<const NodeIndex> in_neighbors(NodeIndex v) const { return in_[v]; }

    bool has_edge(NodeIndex source, NodeIndex target) const;
    bool has_edge(std::string_view source, std::string_view target) const;

    /// Edges ordered by (source index, target index).
    std::vector<std::pair<NodeIndex, NodeIndex>> edges() const;
    /// Edges as id pairs, sorted lexicographically.
    std::vector<std::pair<std::string, std::string>> sorted_edge_ids() const;

    /// Neighbors ignoring direction, deduplicated.
    Adjacency undirected() const;

    /// Same nodes, every edge flipped.
    DirectedGraph reversed() const;

    /// Rescans both indexes against each other; true when they agree and the
    /// simple-graph invariants hold.
    bool check_consistency() const;

private:
    friend class GraphBuilder;

    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    Adjacency out_;
    Adjacency in_;
};

/// Accumulates nodes and edges, then freezes them into a DirectedGraph.
class GraphBuilder {
public:
    /// Returns the index of `id`, registering it if new.
    NodeIndex add_node(const std::string &id);

    /// Adds both endpoints as needed. Returns false for an edge already present.
    /// Throws UsageError on a self-loop.
    bool add_edge(const std::string &source, const std::string &target);

    DirectedGraph build() &&;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<std::vector<NodeIndex>> out_;
};

} // namespace hashnet
