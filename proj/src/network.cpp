#include "hashnet/network.hpp"

#include <cctype>

#include "hashnet/error.hpp"

namespace hashnet {

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

DirectedGraph freeze(const std::set<std::string> &nodes, const EdgeSet &edges) {
    GraphBuilder b;
    for (const auto &id : nodes)
        b.add_node(id);
    for (const auto &[s, t] : edges)
        b.add_edge(s, t);
    return std::move(b).build();
}

EdgeSet simple_edges(const EdgeList &edges) {
    EdgeSet out;
    for (const auto &e : edges)
        if (e.first != e.second)
            out.insert(e);
    return out;
}

} // namespace

char to_letter(RelationKind k) {
    switch (k) {
    case RelationKind::Follows:
        return 'F';
    case RelationKind::Mentions:
        return 'M';
    case RelationKind::Replies:
        return 'R';
    }
    return '?';
}

std::optional<RelationKind> parse_relation_kind(std::string_view s) {
    if (s.size() != 1)
        return std::nullopt;
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'F':
        return RelationKind::Follows;
    case 'M':
        return RelationKind::Mentions;
    case 'R':
        return RelationKind::Replies;
    default:
        return std::nullopt;
    }
}

std::set<RelationKind> parse_relation_kinds(std::string_view s) {
    std::set<RelationKind> kinds;
    for (char c : s) {
        if (c == ',' || c == '+' || std::isspace(static_cast<unsigned char>(c)))
            continue;
        auto k = parse_relation_kind(std::string_view(&c, 1));
        if (!k)
            throw UsageError("unknown layer '" + std::string(1, c) + "' (expected F, M or R)");
        kinds.insert(*k);
    }
    if (kinds.empty())
        throw UsageError("no layers selected");
    return kinds;
}

LayeredNetwork LayeredNetwork::make(std::set<std::string> core_tweeters, const EdgeList &follows,
                                    const EdgeList &mentions, const EdgeList &replies,
                                    std::map<std::string, AccountRecord> attributes) {
    LayeredNetwork net;

    EdgeSet f = simple_edges(follows);
    for (const auto &[s, t] : f)
        if (!core_tweeters.count(s) || !core_tweeters.count(t))
            throw UsageError("follow edge " + s + "->" + t + " leaves the core tweeters");
    net.layers_[0] = freeze(core_tweeters, f);

    int slot = 1;
    for (const EdgeList *list : {&mentions, &replies}) {
        EdgeSet edges = simple_edges(*list);
        std::set<std::string> nodes;
        for (const auto &[s, t] : edges) {
            if (!core_tweeters.count(s))
                throw UsageError("edge " + s + "->" + t + " has a source outside the core tweeters");
            nodes.insert(s);
            nodes.insert(t);
        }
        net.layers_[slot++] = freeze(nodes, edges);
    }

    for (const auto &layer : net.layers_) {
        for (const auto &id : layer.node_ids()) {
            if (!attributes.count(id)) {
                AccountRecord placeholder;
                placeholder.account_id = id;
                placeholder.screen_name = id;
                placeholder.category = Category::Unlabeled;
                attributes.emplace(id, std::move(placeholder));
            }
        }
    }
    net.attributes_ = std::move(attributes);
    net.core_.assign(core_tweeters.begin(), core_tweeters.end());
    return net;
}

const AccountRecord *LayeredNetwork::account(const std::string &id) const {
    auto it = attributes_.find(id);
    return it == attributes_.end() ? nullptr : &it->second;
}

DirectedGraph union_layers(const LayeredNetwork &network, const std::set<RelationKind> &kinds) {
    if (kinds.empty())
        throw UsageError("union_layers: at least one layer must be selected");

    std::set<std::string> nodes;
    EdgeSet edges;
    if (kinds.count(RelationKind::Follows))
        nodes.insert(network.core_tweeters().begin(), network.core_tweeters().end());
    for (RelationKind k : kinds) {
        const DirectedGraph &g = network.layer(k);
        for (auto [u, v] : g.edges()) {
            nodes.insert(g.id(u));
            nodes.insert(g.id(v));
            edges.emplace(g.id(u), g.id(v));
        }
    }
    return freeze(nodes, edges);
}

} // namespace hashnet
