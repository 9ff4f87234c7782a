#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hashnet/centrality.hpp"
#include "hashnet/network.hpp"
#include "hashnet/records.hpp"

namespace hashnet {

struct HighCenterStats {
    double max = 0.0;
    double mean = 0.0;
    double median = 0.0;                     // midpoint of the two middle values for even sizes
    std::optional<double> max_over_mean;     // empty when the mean is 0
    std::optional<double> max_over_median;   // empty when the median is 0
};

/// Throws UndefinedRatioError on an empty vector.
HighCenterStats high_center_stats(const MetricVector &betweenness);

struct InteractivityRatio {
    double edge_ratio = 0.0;
    double vertex_ratio = 0.0;
    std::size_t conversational_edges = 0;    // |E(M ∪ R)|
    std::size_t all_edges = 0;               // |E(F ∪ M ∪ R)|
    std::size_t conversational_vertices = 0; // edge-incident nodes of M ∪ R
    std::size_t all_vertices = 0;            // core tweeters plus external endpoints
};

/// Compares the conversational layers (M ∪ R) with all layers (F ∪ M ∪ R).
/// Throws UndefinedRatioError when the full union has no nodes or no edges.
InteractivityRatio interactivity_ratio(const LayeredNetwork &network);

struct MainComponentShare {
    double node_share = 0.0;
    std::optional<double> edge_share; // empty for an edgeless graph
    std::size_t main_nodes = 0;
    std::size_t main_edges = 0;
};

/// Share of nodes and edges inside the largest weakly connected component.
/// Throws UndefinedRatioError on an empty graph.
MainComponentShare main_component_share(const DirectedGraph &g);

/// Fraction of tweets with at least one URL. Throws UndefinedRatioError on
/// an empty list.
double url_tweet_fraction(const std::vector<TweetRecord> &tweets);

struct CategoryCounts {
    std::size_t org = 0;
    std::size_t jmb = 0;
    std::size_t oi = 0;
    std::size_t other = 0;     // includes unlabeled accounts
    std::size_t unlabeled = 0; // subset of `other`

    std::size_t total() const { return org + jmb + oi + other; }
    bool operator==(const CategoryCounts &) const = default;
};

using TopList = std::vector<std::pair<std::string, double>>;
using CategoryTally = std::map<Metric, CategoryCounts>;

/// Account categories among each metric's top list. Throws
/// MissingAttributeError if an account has no record.
CategoryTally category_tally(const LayeredNetwork &network,
                             const std::map<Metric, TopList> &top_lists);

/// Metrics tabulated by category, in report row order.
inline constexpr std::array<Metric, 5> kTallyMetrics{Metric::InDegree, Metric::OutDegree,
                                                     Metric::Betweenness, Metric::PageRank,
                                                     Metric::Eigenvector};

/// Indicator levels at or above which a criterion counts as met. Defaults
/// are the values observed for the Athens network.
struct CommunityThresholds {
    double high_center_max_over_mean = 27.9;
    double interactivity_edge_ratio = 0.192;
    double main_component_node_share = 0.814;
    double url_tweet_fraction = 0.429;

    bool operator==(const CommunityThresholds &) const = default;
};

struct CommunityVerdicts {
    bool high_centers = false;
    bool interactive = false;
    bool membership = false;
    bool informational = false;

    bool operator==(const CommunityVerdicts &) const = default;
};

/// Labeled free-text annotations copied into the report unchanged.
using NarrativeFields = std::map<std::string, std::string>;
NarrativeFields default_narrative_fields();

struct CommunityIndicators {
    std::optional<double> high_center_max_over_mean;
    std::optional<double> high_center_max_over_median;
    std::optional<double> interactivity_edge_ratio;
    std::optional<double> interactivity_vertex_ratio;
    std::optional<double> main_component_node_share;
    std::optional<double> main_component_edge_share;
    std::optional<double> url_tweet_fraction;
    CategoryTally category_tallies;
    NarrativeFields narrative_fields;
    CommunityVerdicts verdicts;

    bool operator==(const CommunityIndicators &) const = default;
};

/// Compares each indicator with its threshold, inclusively. A missing
/// indicator never meets its criterion.
CommunityVerdicts evaluate_verdicts(const CommunityIndicators &ind,
                                    const CommunityThresholds &thresholds);

struct CommunityOptions {
    CommunityThresholds thresholds;
    NarrativeFields narrative = default_narrative_fields();
    std::size_t top_k = 20;
};

/// Assembles every indicator. Undefined ratios become empty fields; the
/// report itself never fails on them.
///
/// `analyzed` is the graph the metric suite was computed on; the main
/// component and high-center figures refer to it.
CommunityIndicators community_report(const LayeredNetwork &network, const DirectedGraph &analyzed,
                                     const std::vector<TweetRecord> &tweets,
                                     const MetricSuite &metrics, const CommunityOptions &options);

} // namespace hashnet
