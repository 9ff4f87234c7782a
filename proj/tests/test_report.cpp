#include <algorithm>
#include <random>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "hashnet/config.hpp"
#include "hashnet/error.hpp"
#include "hashnet/export.hpp"
#include "hashnet/report.hpp"
#include "oracles.hpp"

using namespace hashnet;
using oracle::graph_of;

namespace {

std::string exported(const DirectedGraph &g, GraphFormat f,
                     const std::map<std::string, AccountRecord> &attrs = {}) {
    std::ostringstream out;
    export_graph(g, attrs, f, out);
    return out.str();
}

AnalysisReport sample_report() {
    AnalysisReport r;
    r.settings.layers = "F+M";
    r.corpus = {10, 7, 5, 1};
    r.layers = {{'F', {5, 6}}, {'M', {4, 3}}, {'R', {0, 0}}};
    r.summary.node_count = 527;
    r.summary.edge_count = 1947;
    r.summary.density = 1947.0 / (527.0 * 526.0);
    r.summary.component_count = 30;
    r.summary.avg_geodesic_distance = 4.17;
    r.summary.diameter = 11;
    r.summary.avg_betweenness = 1114.0;
    r.summary.avg_eigenvector = 1.0 / 527.0;
    r.summary.avg_clustering = std::nullopt;
    r.community.high_center_max_over_mean = 27.9;
    r.community.interactivity_edge_ratio = 0.192;
    r.community.url_tweet_fraction = 3.0 / 7.0;
    r.community.category_tallies[Metric::InDegree] = {3, 9, 8, 0, 0};
    r.community.category_tallies[Metric::PageRank] = {2, 4, 10, 4, 3};
    r.community.narrative_fields = default_narrative_fields();
    r.community.narrative_fields["temporality"] = "2011 austerity protests";
    r.community.verdicts = {true, true, false, true};
    r.top_nodes[Metric::InDegree] = {{"u1", 12.0}, {"u2", 9.0}};
    return r;
}

const nlohmann::ordered_json *field(const nlohmann::ordered_json &cmp, const std::string &name) {
    for (const auto &f : cmp["fields"])
        if (f["field"] == name)
            return &f;
    return nullptr;
}

} // namespace

TEST(Export, SingleEdgeCsv) {
    EXPECT_EQ(exported(graph_of({{"a", "b"}}), GraphFormat::EdgeCsv), "source,target\na,b\n");
}

TEST(Export, EdgeCsvRoundTrip) {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 30; ++round) {
        auto g = oracle::random_graph(rng, 12);
        std::istringstream in(exported(g, GraphFormat::EdgeCsv));
        auto edges = read_edge_csv(in);
        std::sort(edges.begin(), edges.end());
        EXPECT_EQ(edges, g.sorted_edge_ids());
    }
}

TEST(Export, QuotedIdsRoundTrip) {
    auto g = graph_of({{"a,b", "c\"d"}, {"plain", "a,b"}});
    std::istringstream in(exported(g, GraphFormat::EdgeCsv));
    auto edges = read_edge_csv(in);
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(edges, g.sorted_edge_ids());
}

TEST(Export, UnsupportedFormat) {
    EXPECT_THROW(parse_graph_format("gexf"), UsageError);
    EXPECT_EQ(parse_graph_format("edge-csv"), GraphFormat::EdgeCsv);
}

TEST(Export, GraphmlCarriesAttributes) {
    std::map<std::string, AccountRecord> attrs{{"a", {"a", "Alpha & Co", 120, 3400, Category::Org}}};
    auto text = exported(graph_of({{"b", "a"}}), GraphFormat::GraphML, attrs);
    EXPECT_NE(text.find("schema_version"), std::string::npos);
    EXPECT_NE(text.find("Alpha &amp; Co"), std::string::npos);
    EXPECT_NE(text.find(">3400<"), std::string::npos);
    EXPECT_NE(text.find("UNLABELED"), std::string::npos);
    EXPECT_LT(text.find("id=\"a\""), text.find("id=\"b\""));
}

TEST(Export, DotCarriesSchemaVersion) {
    auto text = exported(graph_of({{"b", "a"}}), GraphFormat::Dot);
    EXPECT_NE(text.find("schema_version=1"), std::string::npos);
    EXPECT_NE(text.find("\"b\" -> \"a\""), std::string::npos);
}

TEST(Report, NullsForUndefinedValues) {
    auto doc = to_json(sample_report());
    EXPECT_EQ(doc["schema_version"], kSchemaVersion);
    EXPECT_TRUE(doc["summary"]["avg_clustering"].is_null());
    EXPECT_TRUE(doc["community"]["main_component_node_share"].is_null());
    EXPECT_EQ(doc["summary"]["diameter"], 11);
}

TEST(Report, JsonRoundTrip) {
    const AnalysisReport r = sample_report();
    auto parsed = report_from_json(nlohmann::json::parse(to_json(r).dump()));
    EXPECT_EQ(parsed, r);
}

TEST(Report, RejectsForeignVersion) {
    auto doc = nlohmann::json::parse(to_json(sample_report()).dump());
    doc["schema_version"] = 99;
    EXPECT_THROW(report_from_json(doc), VersionError);
    doc.erase("schema_version");
    EXPECT_THROW(report_from_json(doc), VersionError);
}

TEST(Report, TextRendering) {
    auto text = render_text(sample_report());
    EXPECT_NE(text.find("METRICS OF THE F+M NETWORK"), std::string::npos);
    EXPECT_TRUE(std::regex_search(text, std::regex(R"(density\s+0\.007)")));
    EXPECT_TRUE(std::regex_search(text, std::regex(R"(avg eigenvector centrality\s+0\.002)")));
    EXPECT_TRUE(std::regex_search(text, std::regex(R"(avg clustering coefficient\s+undefined)")));
    EXPECT_TRUE(std::regex_search(text, std::regex(R"(\n\s+in-degree\s+3\s+9\s+8\s+0\n)")));
    EXPECT_NE(text.find("0.4286 (42.9%)"), std::string::npos);
    EXPECT_NE(text.find("3 of 'other' are unlabeled"), std::string::npos);
    EXPECT_NE(text.find("2011 austerity protests"), std::string::npos);
}

TEST(Report, PercentFormatting) {
    EXPECT_EQ(percent(3.0 / 7.0), "42.9%");
    EXPECT_EQ(percent(0.814), "81.4%");
    EXPECT_EQ(percent(1.0), "100.0%");
}

TEST(Compare, SelfHasZeroDeltas) {
    auto doc = nlohmann::json::parse(to_json(sample_report()).dump());
    auto cmp = compare_reports(doc, doc);
    for (const auto &f : cmp["fields"]) {
        EXPECT_EQ(f["status"], "equal");
        if (f.contains("abs_delta")) {
            EXPECT_EQ(f["abs_delta"].get<double>(), 0.0);
        }
    }
}

TEST(Compare, RelativeDeltaAgainstBaseline) {
    auto a = nlohmann::json::parse(to_json(sample_report()).dump());
    auto b = a;
    a["summary"]["density"] = 0.001;
    b["summary"]["density"] = 0.007;
    auto cmp = compare_reports(a, b);
    const auto *f = field(cmp, "/summary/density");
    ASSERT_NE(f, nullptr);
    EXPECT_EQ((*f)["status"], "changed");
    EXPECT_NEAR((*f)["rel_delta"].get<double>(), 6.0, 1e-12);
    EXPECT_NEAR((*f)["abs_delta"].get<double>(), 0.006, 1e-15);
}

TEST(Compare, AddedAndRemovedFields) {
    auto a = nlohmann::json::parse(to_json(sample_report()).dump());
    auto b = a;
    b["summary"]["extra_metric"] = 1.5;
    a["summary"]["old_metric"] = 2;
    auto cmp = compare_reports(a, b);
    EXPECT_EQ((*field(cmp, "/summary/extra_metric"))["status"], "added");
    EXPECT_EQ((*field(cmp, "/summary/old_metric"))["status"], "removed");
}

TEST(Compare, VersionMismatch) {
    auto a = nlohmann::json::parse(to_json(sample_report()).dump());
    auto b = a;
    b["schema_version"] = 2;
    EXPECT_THROW(compare_reports(a, b), VersionError);
}

TEST(Config, RelativePathsAndOverrides) {
    RunConfig c;
    apply_run_config(c, nlohmann::json::parse(R"({
        "inputs": {"tweets": "corpus/t.jsonl", "accounts": "/abs/a.jsonl", "follows": "f.jsonl"},
        "filter": {"include_hashtag": "athens", "exclude_terms": ["georgia"]},
        "analysis": {"layers": "F,M", "betweenness_mode": "undirected", "top_k": 5, "workers": 4},
        "thresholds": {"url_tweet_fraction": 0.5},
        "narrative": {"temporality": "February"},
        "output_dir": "out"})"),
                     "/base");
    EXPECT_EQ(c.tweets, std::filesystem::path("/base/corpus/t.jsonl"));
    EXPECT_EQ(c.accounts, std::filesystem::path("/abs/a.jsonl"));
    EXPECT_EQ(c.output_dir, std::filesystem::path("/base/out"));
    EXPECT_EQ(c.layers, (std::set<RelationKind>{RelationKind::Follows, RelationKind::Mentions}));
    EXPECT_EQ(c.metrics.betweenness_mode, PathMode::Undirected);
    EXPECT_EQ(c.metrics.workers, 4u);
    EXPECT_EQ(c.top_k, 5u);
    EXPECT_EQ(c.thresholds.url_tweet_fraction, 0.5);
    EXPECT_EQ(c.narrative.at("temporality"), "February");
    EXPECT_NO_THROW(c.validate());
}

TEST(Config, ValidationNamesField) {
    RunConfig c;
    try {
        apply_run_config(c, nlohmann::json::parse(R"({"analysis": {"top_k": "many"}})"), {});
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.field(), "analysis.top_k");
    }
    try {
        apply_run_config(c, nlohmann::json::parse(R"({"analysis": {"geodesic_mode": "sideways"}})"), {});
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.field(), "analysis.geodesic_mode");
    }
    try {
        c.validate();
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.field(), "inputs.tweets");
    }
}

TEST(Config, SynthSection) {
    auto s = synth_config_from_json(nlohmann::json::parse(
        R"({"synth": {"seed": 7, "account_count": 50, "category_mix": {"ORG": 0.5, "JMB": 0.5, "OI": 0, "OTHER": 0}}})"));
    EXPECT_EQ(s.seed, 7u);
    EXPECT_EQ(s.account_count, 50);
    EXPECT_EQ(s.category_mix.org, 0.5);
    EXPECT_EQ(s.follow_edges_target, SynthConfig{}.follow_edges_target);
}
