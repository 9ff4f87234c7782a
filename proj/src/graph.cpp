#include "hashnet/graph.hpp"

#include <algorithm>

#include "hashnet/error.hpp"

namespace hashnet {

namespace {

Adjacency compress(const std::vector<std::vector<NodeIndex>> &lists) {
    Adjacency adj;
    adj.offsets.reserve(lists.size() + 1);
    for (const auto &l : lists) {
        adj.targets.insert(adj.targets.end(), l.begin(), l.end());
        adj.offsets.push_back(adj.targets.size());
    }
    return adj;
}

// Builds the transposed adjacency. Sources are visited in ascending order, so
// every resulting list is already sorted.
Adjacency transpose(const Adjacency &adj) {
    const std::size_t n = adj.node_count();
    std::vector<std::vector<NodeIndex>> lists(n);
    for (NodeIndex u = 0; u < n; ++u)
        for (NodeIndex v : adj[u])
            lists[v].push_back(u);
    return compress(lists);
}

} // namespace

std::optional<NodeIndex> DirectedGraph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool DirectedGraph::has_edge(NodeIndex source, NodeIndex target) const {
    auto nbrs = out_[source];
    return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

bool DirectedGraph::has_edge(std::string_view source, std::string_view target) const {
    auto s = find(source);
    auto t = find(target);
    return s && t && has_edge(*s, *t);
}

std::vector<std::pair<NodeIndex, NodeIndex>> DirectedGraph::edges() const {
    std::vector<std::pair<NodeIndex, NodeIndex>> result;
    result.reserve(edge_count());
    for (NodeIndex u = 0; u < node_count(); ++u)
        for (NodeIndex v : out_[u])
            result.emplace_back(u, v);
    return result;
}

std::vector<std::pair<std::string, std::string>> DirectedGraph::sorted_edge_ids() const {
    std::vector<std::pair<std::string, std::string>> result;
    result.reserve(edge_count());
    for (auto [u, v] : edges())
        result.emplace_back(ids_[u], ids_[v]);
    std::sort(result.begin(), result.end());
    return result;
}

Adjacency DirectedGraph::undirected() const {
    std::vector<std::vector<NodeIndex>> lists(node_count());
    for (NodeIndex v = 0; v < node_count(); ++v) {
        auto o = out_[v];
        auto i = in_[v];
        auto &dst = lists[v];
        dst.reserve(o.size() + i.size());
        std::set_union(o.begin(), o.end(), i.begin(), i.end(), std::back_inserter(dst));
    }
    return compress(lists);
}

DirectedGraph DirectedGraph::reversed() const {
    DirectedGraph g;
    g.ids_ = ids_;
    g.index_ = index_;
    g.out_ = in_;
    g.in_ = out_;
    return g;
}

bool DirectedGraph::check_consistency() const {
    const std::size_t n = node_count();
    if (out_.node_count() != n || in_.node_count() != n || index_.size() != n)
        return false;
    for (NodeIndex v = 0; v < n; ++v) {
        auto it = index_.find(ids_[v]);
        if (it == index_.end() || it->second != v)
            return false;
    }
    for (const Adjacency *adj : {&out_, &in_}) {
        for (NodeIndex v = 0; v < n; ++v) {
            auto nbrs = (*adj)[v];
            for (std::size_t k = 0; k < nbrs.size(); ++k) {
                if (nbrs[k] >= n || nbrs[k] == v)
                    return false;
                if (k > 0 && nbrs[k - 1] >= nbrs[k])
                    return false;
            }
        }
    }
    Adjacency rebuilt = transpose(out_);
    return rebuilt.offsets == in_.offsets && rebuilt.targets == in_.targets;
}

NodeIndex GraphBuilder::add_node(const std::string &id) {
    auto [it, inserted] = index_.try_emplace(id, static_cast<NodeIndex>(ids_.size()));
    if (inserted) {
        ids_.push_back(id);
        out_.emplace_back();
    }
    return it->second;
}

bool GraphBuilder::add_edge(const std::string &source, const std::string &target) {
    if (source == target)
        throw UsageError("self-loop on node '" + source + "'");
    NodeIndex s = add_node(source);
    NodeIndex t = add_node(target);
    auto &nbrs = out_[s];
    if (std::find(nbrs.begin(), nbrs.end(), t) != nbrs.end())
        return false;
    nbrs.push_back(t);
    return true;
}

DirectedGraph GraphBuilder::build() && {
    for (auto &nbrs : out_)
        std::sort(nbrs.begin(), nbrs.end());
    DirectedGraph g;
    g.out_ = compress(out_);
    g.in_ = transpose(g.out_);
    g.ids_ = std::move(ids_);
    g.index_ = std::move(index_);
    return g;
}

} // namespace hashnet
