#include "hashnet/community.hpp"

#include <algorithm>

#include "hashnet/components.hpp"
#include "hashnet/error.hpp"

namespace hashnet {

HighCenterStats high_center_stats(const MetricVector &betweenness) {
    if (betweenness.values.empty())
        throw UndefinedRatioError("high-center ratios of an empty vector");

    HighCenterStats s;
    s.max = *std::max_element(betweenness.values.begin(), betweenness.values.end());
    s.mean = betweenness.mean();

    std::vector<double> sorted = betweenness.values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    s.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;

    if (s.mean != 0.0)
        s.max_over_mean = s.max / s.mean;
    if (s.median != 0.0)
        s.max_over_median = s.max / s.median;
    return s;
}

InteractivityRatio interactivity_ratio(const LayeredNetwork &network) {
    const DirectedGraph conversational =
        union_layers(network, {RelationKind::Mentions, RelationKind::Replies});
    const DirectedGraph all = union_layers(
        network, {RelationKind::Follows, RelationKind::Mentions, RelationKind::Replies});

    InteractivityRatio r;
    r.conversational_edges = conversational.edge_count();
    r.all_edges = all.edge_count();
    r.conversational_vertices = conversational.node_count();
    r.all_vertices = all.node_count();
    if (r.all_edges == 0 || r.all_vertices == 0)
        throw UndefinedRatioError("interactivity ratio: the F+M+R union is empty");
    r.edge_ratio = static_cast<double>(r.conversational_edges) / static_cast<double>(r.all_edges);
    r.vertex_ratio =
        static_cast<double>(r.conversational_vertices) / static_cast<double>(r.all_vertices);
    return r;
}

MainComponentShare main_component_share(const DirectedGraph &g) {
    if (g.empty())
        throw UndefinedRatioError("main component share of an empty graph");
    const ComponentPartition parts = weakly_connected_components(g);

    MainComponentShare s;
    s.main_nodes = parts.components.front().size();
    for (auto [u, v] : g.edges())
        if (parts.component_of[u] == 0)
            ++s.main_edges;
    s.node_share = static_cast<double>(s.main_nodes) / static_cast<double>(g.node_count());
    if (g.edge_count() > 0)
        s.edge_share = static_cast<double>(s.main_edges) / static_cast<double>(g.edge_count());
    return s;
}

double url_tweet_fraction(const std::vector<TweetRecord> &tweets) {
    if (tweets.empty())
        throw UndefinedRatioError("URL fraction of an empty corpus");
    auto with_url = std::count_if(tweets.begin(), tweets.end(),
                                  [](const TweetRecord &t) { return t.url_count >= 1; });
    return static_cast<double>(with_url) / static_cast<double>(tweets.size());
}

CategoryTally category_tally(const LayeredNetwork &network,
                             const std::map<Metric, TopList> &top_lists) {
    CategoryTally tally;
    for (const auto &[metric, list] : top_lists) {
        CategoryCounts &c = tally[metric];
        for (const auto &[id, value] : list) {
            const AccountRecord *acct = network.account(id);
            if (!acct)
                throw MissingAttributeError("no account record for '" + id + "'");
            switch (acct->category) {
            case Category::Org:
                ++c.org;
                break;
            case Category::Jmb:
                ++c.jmb;
                break;
            case Category::Oi:
                ++c.oi;
                break;
            case Category::Other:
                ++c.other;
                break;
            case Category::Unlabeled:
                ++c.other;
                ++c.unlabeled;
                break;
            }
        }
    }
    return tally;
}

NarrativeFields default_narrative_fields() {
    return {{"common_language", ""}, {"temporality", ""}, {"sustained_membership", ""}};
}

CommunityVerdicts evaluate_verdicts(const CommunityIndicators &ind,
                                    const CommunityThresholds &thresholds) {
    auto meets = [](const std::optional<double> &v, double threshold) {
        return v.has_value() && *v >= threshold;
    };
    return {meets(ind.high_center_max_over_mean, thresholds.high_center_max_over_mean),
            meets(ind.interactivity_edge_ratio, thresholds.interactivity_edge_ratio),
            meets(ind.main_component_node_share, thresholds.main_component_node_share),
            meets(ind.url_tweet_fraction, thresholds.url_tweet_fraction)};
}

CommunityIndicators community_report(const LayeredNetwork &network, const DirectedGraph &analyzed,
                                     const std::vector<TweetRecord> &tweets,
                                     const MetricSuite &metrics, const CommunityOptions &options) {
    CommunityIndicators ind;
    ind.narrative_fields = options.narrative;

    if (!metrics.betweenness.values.empty()) {
        auto hc = high_center_stats(metrics.betweenness);
        ind.high_center_max_over_mean = hc.max_over_mean;
        ind.high_center_max_over_median = hc.max_over_median;
    }
    try {
        auto ir = interactivity_ratio(network);
        ind.interactivity_edge_ratio = ir.edge_ratio;
        ind.interactivity_vertex_ratio = ir.vertex_ratio;
    } catch (const UndefinedRatioError &) {
    }
    if (!analyzed.empty()) {
        auto share = main_component_share(analyzed);
        ind.main_component_node_share = share.node_share;
        ind.main_component_edge_share = share.edge_share;
    }
    if (!tweets.empty())
        ind.url_tweet_fraction = url_tweet_fraction(tweets);

    std::map<Metric, TopList> tops;
    for (const MetricVector *v : metrics.vectors())
        if (std::find(kTallyMetrics.begin(), kTallyMetrics.end(), v->metric) != kTallyMetrics.end())
            tops[v->metric] = top_k_nodes(*v, options.top_k);
    ind.category_tallies = category_tally(network, tops);

    ind.verdicts = evaluate_verdicts(ind, options.thresholds);
    return ind;
}

} // namespace hashnet
