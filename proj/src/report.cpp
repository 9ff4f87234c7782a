#include "hashnet/report.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "hashnet/error.hpp"

namespace hashnet {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json opt(const std::optional<double> &v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json opt(const std::optional<std::uint32_t> &v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

const json &member(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key))
        throw Error(std::string("malformed report: missing field '") + key + "'");
    return obj.at(key);
}

std::optional<double> opt_double(const json &obj, const char *key) {
    const json &v = member(obj, key);
    if (v.is_null())
        return std::nullopt;
    return v.get<double>();
}

Metric metric_named(const std::string &name) {
    auto m = parse_metric(name);
    if (!m)
        throw Error("malformed report: unknown metric '" + name + "'");
    return *m;
}

std::string fixed(const std::optional<double> &v, int decimals) {
    return v ? fmt::format("{:.{}f}", *v, decimals) : std::string("undefined");
}

std::string display_name(Metric m) {
    switch (m) {
    case Metric::InDegree:
        return "in-degree";
    case Metric::OutDegree:
        return "out-degree";
    case Metric::Betweenness:
        return "betweenness";
    case Metric::Eigenvector:
        return "eigenvector";
    case Metric::PageRank:
        return "pageRank";
    case Metric::Clustering:
        return "clustering";
    }
    return "?";
}

} // namespace

std::string percent(double fraction) { return fmt::format("{:.1f}%", fraction * 100.0); }

ordered_json to_json(const AnalysisReport &r) {
    ordered_json doc;
    doc["schema_version"] = r.schema_version;

    auto &s = doc["settings"];
    s["layers"] = r.settings.layers;
    s["betweenness_mode"] = std::string(to_string(r.settings.betweenness_mode));
    s["geodesic_mode"] = std::string(to_string(r.settings.geodesic_mode));
    s["eigenvector_mode"] = std::string(to_string(r.settings.eigenvector_mode));
    s["pagerank_damping"] = r.settings.pagerank_damping;
    s["top_k"] = r.settings.top_k;

    auto &c = doc["corpus"];
    c["tweets_read"] = r.corpus.tweets_read;
    c["tweets_retained"] = r.corpus.tweets_retained;
    c["core_tweeters"] = r.corpus.core_tweeters;
    c["rejected_rows"] = r.corpus.rejected_rows;

    auto &layers = doc["layers"];
    layers = ordered_json::object();
    for (const auto &[letter, size] : r.layers)
        layers[std::string(1, letter)] = {{"nodes", size.nodes}, {"edges", size.edges}};

    const NetworkSummary &ns = r.summary;
    auto &sum = doc["summary"];
    sum["node_count"] = ns.node_count;
    sum["edge_count"] = ns.edge_count;
    sum["density"] = opt(ns.density);
    sum["component_count"] = ns.component_count;
    sum["avg_geodesic_distance"] = opt(ns.avg_geodesic_distance);
    sum["diameter"] = opt(ns.diameter);
    sum["avg_betweenness"] = opt(ns.avg_betweenness);
    sum["avg_eigenvector"] = opt(ns.avg_eigenvector);
    sum["avg_clustering"] = opt(ns.avg_clustering);

    const CommunityIndicators &ci = r.community;
    auto &com = doc["community"];
    com["high_center_max_over_mean"] = opt(ci.high_center_max_over_mean);
    com["high_center_max_over_median"] = opt(ci.high_center_max_over_median);
    com["interactivity_edge_ratio"] = opt(ci.interactivity_edge_ratio);
    com["interactivity_vertex_ratio"] = opt(ci.interactivity_vertex_ratio);
    com["main_component_node_share"] = opt(ci.main_component_node_share);
    com["main_component_edge_share"] = opt(ci.main_component_edge_share);
    com["url_tweet_fraction"] = opt(ci.url_tweet_fraction);
    auto &tallies = com["category_tallies"];
    tallies = ordered_json::object();
    for (const auto &[metric, counts] : ci.category_tallies)
        tallies[std::string(to_string(metric))] = {{"ORG", counts.org},
                                                   {"JMB", counts.jmb},
                                                   {"OI", counts.oi},
                                                   {"OTHER", counts.other},
                                                   {"UNLABELED", counts.unlabeled}};
    auto &narr = com["narrative_fields"];
    narr = ordered_json::object();
    for (const auto &[k, v] : ci.narrative_fields)
        narr[k] = v;
    com["verdicts"] = {{"high_centers", ci.verdicts.high_centers},
                       {"interactive", ci.verdicts.interactive},
                       {"membership", ci.verdicts.membership},
                       {"informational", ci.verdicts.informational}};

    doc["thresholds"] = {
        {"high_center_max_over_mean", r.thresholds.high_center_max_over_mean},
        {"interactivity_edge_ratio", r.thresholds.interactivity_edge_ratio},
        {"main_component_node_share", r.thresholds.main_component_node_share},
        {"url_tweet_fraction", r.thresholds.url_tweet_fraction}};

    auto &tops = doc["top_nodes"];
    tops = ordered_json::object();
    for (const auto &[metric, list] : r.top_nodes) {
        auto &arr = tops[std::string(to_string(metric))];
        arr = ordered_json::array();
        for (const auto &[id, value] : list)
            arr.push_back({{"id", id}, {"value", value}});
    }
    return doc;
}

AnalysisReport report_from_json(const json &doc) {
    if (!doc.is_object() || !doc.contains("schema_version") ||
        !doc["schema_version"].is_number_integer())
        throw VersionError("report has no schema_version");
    if (doc["schema_version"].get<int>() != kSchemaVersion)
        throw VersionError(fmt::format("report schema_version {} is not supported (expected {})",
                                       doc["schema_version"].get<int>(), kSchemaVersion));
    try {
        AnalysisReport r;
        const json &s = member(doc, "settings");
        r.settings.layers = member(s, "layers").get<std::string>();
        auto bmode = parse_path_mode(member(s, "betweenness_mode").get<std::string>());
        auto gmode = parse_path_mode(member(s, "geodesic_mode").get<std::string>());
        auto emode = parse_eigen_mode(member(s, "eigenvector_mode").get<std::string>());
        if (!bmode || !gmode || !emode)
            throw Error("malformed report: unknown metric mode");
        r.settings.betweenness_mode = *bmode;
        r.settings.geodesic_mode = *gmode;
        r.settings.eigenvector_mode = *emode;
        r.settings.pagerank_damping = member(s, "pagerank_damping").get<double>();
        r.settings.top_k = member(s, "top_k").get<std::size_t>();

        const json &c = member(doc, "corpus");
        r.corpus.tweets_read = member(c, "tweets_read").get<std::size_t>();
        r.corpus.tweets_retained = member(c, "tweets_retained").get<std::size_t>();
        r.corpus.core_tweeters = member(c, "core_tweeters").get<std::size_t>();
        r.corpus.rejected_rows = member(c, "rejected_rows").get<std::size_t>();

        for (const auto &[key, val] : member(doc, "layers").items()) {
            if (key.size() != 1)
                throw Error("malformed report: bad layer key '" + key + "'");
            r.layers[key[0]] = {member(val, "nodes").get<std::size_t>(),
                                member(val, "edges").get<std::size_t>()};
        }

        const json &sum = member(doc, "summary");
        r.summary.node_count = member(sum, "node_count").get<std::size_t>();
        r.summary.edge_count = member(sum, "edge_count").get<std::size_t>();
        r.summary.density = opt_double(sum, "density");
        r.summary.component_count = member(sum, "component_count").get<std::size_t>();
        r.summary.avg_geodesic_distance = opt_double(sum, "avg_geodesic_distance");
        if (!member(sum, "diameter").is_null())
            r.summary.diameter = member(sum, "diameter").get<std::uint32_t>();
        r.summary.avg_betweenness = opt_double(sum, "avg_betweenness");
        r.summary.avg_eigenvector = opt_double(sum, "avg_eigenvector");
        r.summary.avg_clustering = opt_double(sum, "avg_clustering");

        const json &com = member(doc, "community");
        CommunityIndicators &ci = r.community;
        ci.high_center_max_over_mean = opt_double(com, "high_center_max_over_mean");
        ci.high_center_max_over_median = opt_double(com, "high_center_max_over_median");
        ci.interactivity_edge_ratio = opt_double(com, "interactivity_edge_ratio");
        ci.interactivity_vertex_ratio = opt_double(com, "interactivity_vertex_ratio");
        ci.main_component_node_share = opt_double(com, "main_component_node_share");
        ci.main_component_edge_share = opt_double(com, "main_component_edge_share");
        ci.url_tweet_fraction = opt_double(com, "url_tweet_fraction");
        for (const auto &[name, counts] : member(com, "category_tallies").items()) {
            CategoryCounts cc;
            cc.org = member(counts, "ORG").get<std::size_t>();
            cc.jmb = member(counts, "JMB").get<std::size_t>();
            cc.oi = member(counts, "OI").get<std::size_t>();
            cc.other = member(counts, "OTHER").get<std::size_t>();
            cc.unlabeled = member(counts, "UNLABELED").get<std::size_t>();
            ci.category_tallies[metric_named(name)] = cc;
        }
        for (const auto &[k, v] : member(com, "narrative_fields").items())
            ci.narrative_fields[k] = v.get<std::string>();
        const json &verdicts = member(com, "verdicts");
        ci.verdicts.high_centers = member(verdicts, "high_centers").get<bool>();
        ci.verdicts.interactive = member(verdicts, "interactive").get<bool>();
        ci.verdicts.membership = member(verdicts, "membership").get<bool>();
        ci.verdicts.informational = member(verdicts, "informational").get<bool>();

        const json &t = member(doc, "thresholds");
        r.thresholds.high_center_max_over_mean = member(t, "high_center_max_over_mean").get<double>();
        r.thresholds.interactivity_edge_ratio = member(t, "interactivity_edge_ratio").get<double>();
        r.thresholds.main_component_node_share = member(t, "main_component_node_share").get<double>();
        r.thresholds.url_tweet_fraction = member(t, "url_tweet_fraction").get<double>();

        for (const auto &[name, list] : member(doc, "top_nodes").items()) {
            TopList &out = r.top_nodes[metric_named(name)];
            for (const auto &entry : list)
                out.emplace_back(member(entry, "id").get<std::string>(),
                                 member(entry, "value").get<double>());
        }
        return r;
    } catch (const json::exception &e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
}

std::string render_text(const AnalysisReport &r) {
    const NetworkSummary &s = r.summary;
    std::string out;
    auto line = [&](std::string text) {
        out += text;
        out += '\n';
    };
    auto row = [&](const std::string &l, const std::string &lv, const std::string &rt,
                   const std::string &rv) {
        line(fmt::format("  {:<30}{:>12}    {:<30}{:>12}", l, lv, rt, rv));
    };

    line(fmt::format("METRICS OF THE {} NETWORK", r.settings.layers));
    row("network size (no of nodes)", std::to_string(s.node_count), "diameter",
        s.diameter ? std::to_string(*s.diameter) : "undefined");
    row("edges", std::to_string(s.edge_count), "avg betweenness centrality",
        fixed(s.avg_betweenness, 1));
    row("density", fixed(s.density, 3), "avg eigenvector centrality", fixed(s.avg_eigenvector, 3));
    row("connected components", std::to_string(s.component_count), "avg clustering coefficient",
        fixed(s.avg_clustering, 3));
    row("avg. geodesic distance", fixed(s.avg_geodesic_distance, 2), "", "");
    line("");

    line("LAYERS");
    for (const auto &[letter, size] : r.layers)
        line(fmt::format("  {}: {} nodes, {} edges", letter, size.nodes, size.edges));
    line(fmt::format("  tweets read {}, retained {}, core tweeters {}, rejected rows {}",
                     r.corpus.tweets_read, r.corpus.tweets_retained, r.corpus.core_tweeters,
                     r.corpus.rejected_rows));
    line("");

    line(fmt::format("TYPES OF ACCOUNT OF THE MOST CENTRAL NODES (top {})", r.settings.top_k));
    line(fmt::format("  {:<14}{:>14}{:>8}{:>8}{:>8}", "", "organizations", "J/MB", "OI", "other"));
    for (Metric m : kTallyMetrics) {
        auto it = r.community.category_tallies.find(m);
        if (it == r.community.category_tallies.end())
            continue;
        const CategoryCounts &c = it->second;
        line(fmt::format("  {:<14}{:>14}{:>8}{:>8}{:>8}", display_name(m), c.org, c.jmb, c.oi,
                         c.other));
    }
    for (Metric m : kTallyMetrics) {
        auto it = r.community.category_tallies.find(m);
        if (it != r.community.category_tallies.end() && it->second.unlabeled > 0)
            line(fmt::format("  ({}: {} of 'other' are unlabeled)", display_name(m),
                             it->second.unlabeled));
    }
    line("");

    const CommunityIndicators &ci = r.community;
    const CommunityThresholds &th = r.thresholds;
    auto ratio = [&](const std::string &label, const std::optional<double> &v) {
        if (!v)
            line(fmt::format("  {:<46}undefined", label));
        else
            line(fmt::format("  {:<46}{:.4f} ({})", label, *v, percent(*v)));
    };
    auto verdict = [](bool b) { return b ? "yes" : "no"; };

    line("COMMUNITY INDICATORS");
    line(fmt::format("  {:<46}{}", "high centers: max / mean betweenness",
                     fixed(ci.high_center_max_over_mean, 1)));
    line(fmt::format("  {:<46}{}", "high centers: max / median betweenness",
                     fixed(ci.high_center_max_over_median, 1)));
    ratio("interactivity: M+R edges / F+M+R edges", ci.interactivity_edge_ratio);
    ratio("interactivity: M+R vertices / F+M+R vertices", ci.interactivity_vertex_ratio);
    ratio("membership: main component node share", ci.main_component_node_share);
    ratio("membership: main component edge share", ci.main_component_edge_share);
    ratio("needs: tweets containing URLs", ci.url_tweet_fraction);
    line("");
    line("CRITERIA (indicator >= threshold)");
    line(fmt::format("  {:<46}{:<5}(threshold {})", "high centers", verdict(ci.verdicts.high_centers),
                     th.high_center_max_over_mean));
    line(fmt::format("  {:<46}{:<5}(threshold {})", "interactivity", verdict(ci.verdicts.interactive),
                     th.interactivity_edge_ratio));
    line(fmt::format("  {:<46}{:<5}(threshold {})", "membership", verdict(ci.verdicts.membership),
                     th.main_component_node_share));
    line(fmt::format("  {:<46}{:<5}(threshold {})", "informational",
                     verdict(ci.verdicts.informational), th.url_tweet_fraction));
    if (!ci.narrative_fields.empty()) {
        line("");
        line("NOTES");
        for (const auto &[k, v] : ci.narrative_fields)
            line(fmt::format("  {}: {}", k, v.empty() ? "(none)" : v));
    }
    return out;
}

ordered_json compare_reports(const json &a, const json &b) {
    auto version = [](const json &doc) -> std::optional<int> {
        if (doc.is_object() && doc.contains("schema_version") &&
            doc["schema_version"].is_number_integer())
            return doc["schema_version"].get<int>();
        return std::nullopt;
    };
    auto va = version(a);
    auto vb = version(b);
    if (!va || !vb)
        throw VersionError("report without schema_version");
    if (*va != *vb || *va != kSchemaVersion)
        throw VersionError(fmt::format("schema version mismatch: {} vs {}", *va, *vb));

    const json fa = a.flatten();
    const json fb = b.flatten();
    std::set<std::string> keys;
    for (const auto &[k, v] : fa.items())
        keys.insert(k);
    for (const auto &[k, v] : fb.items())
        keys.insert(k);

    ordered_json out;
    out["schema_version"] = kSchemaVersion;
    auto &fields = out["fields"];
    fields = ordered_json::array();
    for (const auto &key : keys) {
        ordered_json entry;
        entry["field"] = key;
        const bool in_a = fa.contains(key);
        const bool in_b = fb.contains(key);
        if (!in_a || !in_b) {
            entry["status"] = in_a ? "removed" : "added";
            entry[in_a ? "a" : "b"] = in_a ? fa[key] : fb[key];
            fields.push_back(std::move(entry));
            continue;
        }
        const json &x = fa[key];
        const json &y = fb[key];
        entry["status"] = x == y ? "equal" : "changed";
        entry["a"] = x;
        entry["b"] = y;
        if (x.is_number() && y.is_number()) {
            const double xv = x.get<double>();
            const double yv = y.get<double>();
            entry["abs_delta"] = yv - xv;
            if (xv != 0.0)
                entry["rel_delta"] = (yv - xv) / std::abs(xv);
            else
                entry["rel_delta"] = yv == 0.0 ? ordered_json(0.0) : ordered_json(nullptr);
        }
        fields.push_back(std::move(entry));
    }
    return out;
}

} // namespace hashnet
