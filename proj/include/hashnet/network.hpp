#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hashnet/graph.hpp"
#include "hashnet/records.hpp"

namespace hashnet {

/// Relationship layers: follows (F), mentions and retweets (M), replies (R).
enum class RelationKind { Follows = 0, Mentions = 1, Replies = 2 };

inline constexpr std::array<RelationKind, 3> kAllRelations{
    RelationKind::Follows, RelationKind::Mentions, RelationKind::Replies};

char to_letter(RelationKind k);
/// Parses "F", "M", "R" (case-insensitive).
std::optional<RelationKind> parse_relation_kind(std::string_view s);
/// Parses a layer list such as "F,M,R" or "FMR". Throws UsageError.
std::set<RelationKind> parse_relation_kinds(std::string_view s);

using EdgeList = std::vector<std::pair<std::string, std::string>>;

/// The three relationship graphs over one population of hashtag tweeters.
///
/// The F layer holds every core tweeter, including isolated ones. M and R
/// hold only edge-incident nodes; their targets may lie outside the core.
/// Node registries are in id order.
class LayeredNetwork {
public:
    LayeredNetwork() = default;

    /// Validates and freezes the layers. Self-loops and repeated edges are
    /// dropped. Throws UsageError if an F edge leaves the core or an M/R edge
    /// has a source outside it. Nodes lacking an account record receive an
    /// UNLABELED placeholder.
    static LayeredNetwork make(std::set<std::string> core_tweeters, const EdgeList &follows,
                               const EdgeList &mentions, const EdgeList &replies,
                               std::map<std::string, AccountRecord> attributes = {});

    const std::vector<std::string> &core_tweeters() const { return core_; }
    const DirectedGraph &layer(RelationKind k) const { return layers_[static_cast<int>(k)]; }
    const std::map<std::string, AccountRecord> &attributes() const { return attributes_; }
    const AccountRecord *account(const std::string &id) const;

private:
    std::vector<std::string> core_;
    std::array<DirectedGraph, 3> layers_;
    std::map<std::string, AccountRecord> attributes_;
};

/// Union of the selected layers with cross-layer edge deduplication.
///
/// Nodes are the edge-incident nodes of the chosen layers, plus every core
/// tweeter when F is selected. Throws UsageError for an empty selection.
DirectedGraph union_layers(const LayeredNetwork &network, const std::set<RelationKind> &kinds);

} // namespace hashnet
