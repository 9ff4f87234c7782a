#include "hashnet/components.hpp"

#include <algorithm>
#include <numeric>

namespace hashnet {

namespace {

// Union by size with path halving.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace

std::vector<std::size_t> ComponentPartition::sizes() const {
    std::vector<std::size_t> s;
    s.reserve(components.size());
    for (const auto &c : components)
        s.push_back(c.size());
    return s;
}

ComponentPartition weakly_connected_components(const DirectedGraph &g) {
    const std::size_t n = g.node_count();
    DisjointSets sets(n);
    for (auto [u, v] : g.edges())
        sets.unite(u, v);

    std::vector<std::vector<NodeIndex>> groups(n);
    for (NodeIndex v = 0; v < n; ++v)
        groups[sets.find(v)].push_back(v);

    struct Entry {
        std::vector<NodeIndex> members;
        const std::string *min_id;
    };
    std::vector<Entry> entries;
    for (auto &members : groups) {
        if (members.empty())
            continue;
        const std::string *min_id = &g.id(members.front());
        for (NodeIndex v : members)
            if (g.id(v) < *min_id)
                min_id = &g.id(v);
        entries.push_back({std::move(members), min_id});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
        if (a.members.size() != b.members.size())
            return a.members.size() > b.members.size();
        return *a.min_id < *b.min_id;
    });

    ComponentPartition p;
    p.component_of.assign(n, 0);
    p.components.reserve(entries.size());
    for (std::size_t c = 0; c < entries.size(); ++c) {
        for (NodeIndex v : entries[c].members)
            p.component_of[v] = c;
        p.components.push_back(std::move(entries[c].members));
    }
    return p;
}

} // namespace hashnet
