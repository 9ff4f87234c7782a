#include "hashnet/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "hashnet/error.hpp"
#include "hashnet/export.hpp"

namespace hashnet {

namespace {

std::ifstream open_input(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    return in;
}

// Prefixes parse errors with the file they came from.
template <typename Fn>
auto with_file(const std::string &label, Fn &&fn) {
    try {
        return fn();
    } catch (const ParseError &e) {
        throw ParseError(e.line(), label + ": " + e.detail());
    } catch (const DuplicateKeyError &e) {
        throw InputError(label + ": " + e.what());
    }
}

std::string num(double v) { return fmt::format("{}", v); }

std::string metrics_csv(const LayeredNetwork &network, const MetricSuite &suite) {
    std::vector<const MetricVector *> cols = suite.vectors();
    const MetricVector &first = suite.degree.in;

    std::vector<std::size_t> order(first.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return first.ids[a] < first.ids[b]; });

    std::string out = "account_id,screen_name,category";
    for (const MetricVector *v : cols)
        out += "," + std::string(to_string(v->metric));
    out += '\n';
    for (std::size_t i : order) {
        const std::string &id = first.ids[i];
        const AccountRecord *acct = network.account(id);
        std::string name = acct && !acct->screen_name.empty() ? acct->screen_name : id;
        for (char &c : name)
            if (c == ',' || c == '"' || c == '\n' || c == '\r')
                c = '_';
        out += id + "," + name + "," +
               std::string(acct ? to_string(acct->category) : to_string(Category::Unlabeled));
        for (const MetricVector *v : cols)
            out += "," + num(v->values[i]);
        out += '\n';
    }
    return out;
}

std::string distributions_json(const MetricSuite &suite, std::size_t bins) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["bin_count"] = bins;
    auto &metrics = doc["metrics"];
    metrics = nlohmann::ordered_json::object();
    for (const MetricVector *v : suite.vectors()) {
        auto &entry = metrics[std::string(to_string(v->metric))];
        if (v->values.empty()) {
            entry = nullptr;
            continue;
        }
        Distribution d = metric_distribution(*v, bins);
        entry["bin_width"] = d.bin_width;
        auto &hist = entry["histogram"];
        hist = nlohmann::ordered_json::array();
        for (const auto &[lower, count] : d.histogram)
            hist.push_back({{"lower", lower}, {"count", count}});
        auto &ccdf = entry["ccdf"];
        ccdf = nlohmann::ordered_json::array();
        for (const auto &[value, frac] : d.ccdf)
            ccdf.push_back({{"value", value}, {"fraction_at_least", frac}});
    }
    return doc.dump(2) + "\n";
}

std::string exported(const DirectedGraph &g, const LayeredNetwork &network, GraphFormat format) {
    std::ostringstream out;
    export_graph(g, network.attributes(), format, out);
    return out.str();
}

} // namespace

std::string layer_label(const std::set<RelationKind> &kinds) {
    std::string label;
    for (RelationKind k : kinds) {
        if (!label.empty())
            label += '+';
        label += to_letter(k);
    }
    return label;
}

LoadedCorpus load_corpus(const RunConfig &config) {
    LoadedCorpus corpus;
    {
        auto in = open_input(config.tweets);
        corpus.tweets = with_file(config.tweets.filename().string(), [&] { return parse_tweet_stream(in); });
    }
    {
        auto accounts = open_input(config.accounts);
        auto follows = open_input(config.follows);
        corpus.support = with_file(
            config.accounts.filename().string() + " or " + config.follows.filename().string(), [&] {
            return parse_support_files(accounts, follows);
        });
    }
    if (config.exclusions) {
        auto in = open_input(*config.exclusions);
        corpus.excluded_ids = parse_exclusion_list(in);
    }
    return corpus;
}

AnalysisRun run_analysis(const RunConfig &config) {
    config.validate();
    LoadedCorpus corpus = load_corpus(config);

    FilterQuery query = config.filter;
    query.exclude_tweet_ids.insert(corpus.excluded_ids.begin(), corpus.excluded_ids.end());
    const std::vector<TweetRecord> retained = filter_corpus(corpus.tweets, query);
    if (retained.empty())
        throw InputError("empty corpus after filtering");

    const LayeredNetwork network =
        build_layered_network(retained, corpus.support.accounts, corpus.support.follows);
    const DirectedGraph graph = union_layers(network, config.layers);
    const MetricSuite suite = compute_metric_suite(graph, config.metrics);

    CommunityOptions community_options;
    community_options.thresholds = config.thresholds;
    community_options.narrative = config.narrative;
    community_options.top_k = config.top_k;

    AnalysisRun run;
    AnalysisReport &r = run.report;
    r.settings.layers = layer_label(config.layers);
    r.settings.betweenness_mode = config.metrics.betweenness_mode;
    r.settings.geodesic_mode = config.metrics.geodesic_mode;
    r.settings.eigenvector_mode = config.metrics.eigenvector_mode;
    r.settings.pagerank_damping = config.metrics.pagerank_damping;
    r.settings.top_k = config.top_k;
    r.corpus = {corpus.tweets.size(), retained.size(), network.core_tweeters().size(),
                corpus.support.rejected_rows};
    for (RelationKind k : kAllRelations)
        r.layers[to_letter(k)] = {network.layer(k).node_count(), network.layer(k).edge_count()};
    r.summary = suite.summary;
    r.community = community_report(network, graph, retained, suite, community_options);
    r.thresholds = config.thresholds;
    for (const MetricVector *v : suite.vectors())
        r.top_nodes[v->metric] = top_k_nodes(*v, config.top_k);

    OutputTree &files = run.files;
    files["report.json"] = to_json(r).dump(2) + "\n";
    files["report.txt"] = render_text(r);
    files["metrics.csv"] = metrics_csv(network, suite);
    files["distributions.json"] = distributions_json(suite, config.histogram_bins);
    files["network.graphml"] = exported(graph, network, GraphFormat::GraphML);
    files["network.dot"] = exported(graph, network, GraphFormat::Dot);
    files["network_edges.csv"] = exported(graph, network, GraphFormat::EdgeCsv);
    for (RelationKind k : kAllRelations)
        files[fmt::format("layer_{}_edges.csv", to_letter(k))] =
            exported(network.layer(k), network, GraphFormat::EdgeCsv);

    nlohmann::ordered_json manifest;
    manifest["schema_version"] = kSchemaVersion;
    manifest["files"] = nlohmann::ordered_json::array();
    for (const auto &[name, contents] : files)
        manifest["files"].push_back(name);
    files["manifest.json"] = manifest.dump(2) + "\n";
    return run;
}

void write_output_tree(const OutputTree &files, const std::filesystem::path &dir) {
    std::vector<std::filesystem::path> written;
    try {
        std::filesystem::create_directories(dir);
        for (const auto &[name, contents] : files) {
            const auto path = dir / name;
            written.push_back(path);
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            out << contents;
            out.close();
            if (!out)
                throw InputError("cannot write " + path.string());
        }
    } catch (const std::exception &e) {
        for (const auto &p : written) {
            std::error_code ec;
            std::filesystem::remove(p, ec);
        }
        if (dynamic_cast<const Error *>(&e))
            throw;
        throw InputError(e.what());
    }
}

int exit_code_for(const std::exception &e) {
    if (dynamic_cast<const ConvergenceError *>(&e) || dynamic_cast<const UndefinedMetricError *>(&e) ||
        dynamic_cast<const UndefinedRatioError *>(&e))
        return 2;
    return 1;
}

} // namespace hashnet
