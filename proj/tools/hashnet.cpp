// hashnet: command-line front end.
//
//   hashnet analyze --config run.json [overrides...]
//   hashnet synth   --config fixtures/athens_like.json --out corpus/
//   hashnet export  --tweets t.jsonl --accounts a.jsonl --follows f.jsonl --format graphml
//   hashnet compare a/report.json b/report.json
//
// Exit codes: 0 success, 1 input or validation error, 2 convergence or
// undefined-metric error.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hashnet/config.hpp"
#include "hashnet/error.hpp"
#include "hashnet/export.hpp"
#include "hashnet/ingest.hpp"
#include "hashnet/pipeline.hpp"
#include "hashnet/report.hpp"
#include "hashnet/synth.hpp"

namespace {

using namespace hashnet;

// Command-line values that override the configuration file when given.
struct RunFlags {
    std::string config;
    std::string tweets, accounts, follows, exclusions;
    std::string hashtag;
    std::vector<std::string> exclude_terms;
    std::optional<std::int64_t> window_start, window_end;
    std::string layers;
    std::string betweenness_mode, geodesic_mode, eigenvector_mode;
    std::optional<double> damping, pagerank_tolerance, eigenvector_tolerance;
    std::optional<std::size_t> pagerank_max_iterations, eigenvector_max_iterations;
    std::optional<std::size_t> top_k, bins;
    std::optional<unsigned> workers;
    std::string out;
};

void add_corpus_flags(CLI::App *cmd, RunFlags &f) {
    cmd->add_option("--config", f.config, "JSON run configuration");
    cmd->add_option("--tweets", f.tweets, "Tweets file (JSON Lines)");
    cmd->add_option("--accounts", f.accounts, "Accounts file (JSON Lines)");
    cmd->add_option("--follows", f.follows, "Follow edges file (JSON Lines)");
    cmd->add_option("--exclusions", f.exclusions, "Tweet ids to drop, one per line");
    cmd->add_option("--hashtag", f.hashtag, "Hashtag every retained tweet must carry");
    cmd->add_option("--exclude", f.exclude_terms, "Exclusion keyword (repeatable)");
    cmd->add_option("--window-start", f.window_start, "First second of the window (UTC)");
    cmd->add_option("--window-end", f.window_end, "End of the window, exclusive (UTC)");
    cmd->add_option("--layers", f.layers, "Layers to analyze, e.g. F or F,M,R");
}

void add_metric_flags(CLI::App *cmd, RunFlags &f) {
    cmd->add_option("--betweenness-mode", f.betweenness_mode, "directed | undirected");
    cmd->add_option("--geodesic-mode", f.geodesic_mode, "directed | undirected");
    cmd->add_option("--eigenvector-mode", f.eigenvector_mode, "undirected | directed_in");
    cmd->add_option("--damping", f.damping, "PageRank damping factor");
    cmd->add_option("--pagerank-tolerance", f.pagerank_tolerance);
    cmd->add_option("--pagerank-max-iterations", f.pagerank_max_iterations);
    cmd->add_option("--eigenvector-tolerance", f.eigenvector_tolerance);
    cmd->add_option("--eigenvector-max-iterations", f.eigenvector_max_iterations);
    cmd->add_option("--top-k", f.top_k, "Size of the most-central lists");
    cmd->add_option("--bins", f.bins, "Histogram bins per metric");
    cmd->add_option("--workers", f.workers, "Worker threads for metric computation");
}

RunConfig build_config(const RunFlags &f) {
    RunConfig config;
    config.filter.include_hashtag = "athens";
    if (!f.config.empty()) {
        std::filesystem::path path(f.config);
        apply_run_config(config, load_json_file(path), path.parent_path());
    }

    nlohmann::json overrides = nlohmann::json::object();
    auto set = [&](const char *sec, const char *key, const auto &value) {
        overrides[sec][key] = value;
    };
    if (!f.tweets.empty())
        set("inputs", "tweets", f.tweets);
    if (!f.accounts.empty())
        set("inputs", "accounts", f.accounts);
    if (!f.follows.empty())
        set("inputs", "follows", f.follows);
    if (!f.exclusions.empty())
        set("inputs", "exclusions", f.exclusions);
    if (!f.hashtag.empty())
        set("filter", "include_hashtag", f.hashtag);
    if (!f.exclude_terms.empty())
        set("filter", "exclude_terms", f.exclude_terms);
    if (f.window_start)
        set("filter", "window_start", *f.window_start);
    if (f.window_end)
        set("filter", "window_end", *f.window_end);
    if (!f.layers.empty())
        set("analysis", "layers", f.layers);
    if (!f.betweenness_mode.empty())
        set("analysis", "betweenness_mode", f.betweenness_mode);
    if (!f.geodesic_mode.empty())
        set("analysis", "geodesic_mode", f.geodesic_mode);
    if (!f.eigenvector_mode.empty())
        set("analysis", "eigenvector_mode", f.eigenvector_mode);
    if (f.damping)
        set("analysis", "pagerank_damping", *f.damping);
    if (f.pagerank_tolerance)
        set("analysis", "pagerank_tolerance", *f.pagerank_tolerance);
    if (f.pagerank_max_iterations)
        set("analysis", "pagerank_max_iterations", *f.pagerank_max_iterations);
    if (f.eigenvector_tolerance)
        set("analysis", "eigenvector_tolerance", *f.eigenvector_tolerance);
    if (f.eigenvector_max_iterations)
        set("analysis", "eigenvector_max_iterations", *f.eigenvector_max_iterations);
    if (f.top_k)
        set("analysis", "top_k", *f.top_k);
    if (f.bins)
        set("analysis", "histogram_bins", *f.bins);
    if (f.workers)
        set("analysis", "workers", *f.workers);
    if (!f.out.empty())
        overrides["output_dir"] = f.out;
    apply_run_config(config, overrides, {});
    return config;
}

int run_analyze(const RunFlags &flags) {
    RunConfig config = build_config(flags);
    AnalysisRun run = run_analysis(config);
    write_output_tree(run.files, config.output_dir);
    std::cout << run.files.at("report.txt");
    std::cerr << "wrote " << run.files.size() << " files to " << config.output_dir.string()
              << "\n";
    return 0;
}

int run_export(const RunFlags &flags, const std::string &format_name) {
    RunConfig config = build_config(flags);
    const GraphFormat format = parse_graph_format(format_name);
    config.output_dir = "-"; // unused, satisfies validation
    config.validate();
    LoadedCorpus corpus = load_corpus(config);
    FilterQuery query = config.filter;
    query.exclude_tweet_ids = corpus.excluded_ids;
    auto retained = filter_corpus(corpus.tweets, query);
    LayeredNetwork network =
        build_layered_network(retained, corpus.support.accounts, corpus.support.follows);
    DirectedGraph g = union_layers(network, config.layers);
    if (flags.out.empty()) {
        export_graph(g, network.attributes(), format, std::cout);
    } else {
        std::ofstream out(flags.out, std::ios::binary);
        if (!out)
            throw InputError("cannot write " + flags.out);
        export_graph(g, network.attributes(), format, out);
    }
    return 0;
}

int run_synth(const std::string &config_path, std::optional<std::uint64_t> seed,
              const std::string &out_dir) {
    SynthConfig config;
    if (!config_path.empty())
        config = synth_config_from_json(load_json_file(config_path));
    if (seed)
        config.seed = *seed;
    SynthCorpus corpus = generate_corpus(config);

    std::ostringstream tweets, accounts, follows;
    write_tweets(tweets, corpus.tweets);
    write_accounts(accounts, corpus.accounts);
    write_follows(follows, corpus.follows);
    write_output_tree({{"tweets.jsonl", tweets.str()},
                       {"accounts.jsonl", accounts.str()},
                       {"follows.jsonl", follows.str()}},
                      out_dir);
    std::cerr << "generated " << corpus.accounts.size() << " accounts, " << corpus.follows.size()
              << " follow edges, " << corpus.tweets.size() << " tweets in " << out_dir << "\n";
    return 0;
}

int run_compare(const std::string &a, const std::string &b, const std::string &out) {
    auto result = compare_reports(load_json_file(a), load_json_file(b));
    const std::string text = result.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        write_output_tree({{std::filesystem::path(out).filename().string(), text}},
                          std::filesystem::path(out).parent_path().empty()
                              ? std::filesystem::path(".")
                              : std::filesystem::path(out).parent_path());
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"City-hashtag Twitter network analysis"};
    app.require_subcommand(1);

    RunFlags analyze_flags;
    auto *analyze = app.add_subcommand("analyze", "Run the full metric and community analysis");
    add_corpus_flags(analyze, analyze_flags);
    add_metric_flags(analyze, analyze_flags);
    analyze->add_option("--out", analyze_flags.out, "Output directory");

    RunFlags export_flags;
    std::string format = "graphml";
    auto *exp = app.add_subcommand("export", "Export a layer union as graphml, dot or edge-csv");
    add_corpus_flags(exp, export_flags);
    exp->add_option("--format", format, "graphml | dot | edge-csv");
    exp->add_option("--out", export_flags.out, "Output file (default: stdout)");

    std::string synth_config, synth_out = "corpus";
    std::optional<std::uint64_t> synth_seed;
    auto *synth = app.add_subcommand("synth", "Generate a synthetic corpus");
    synth->add_option("--config", synth_config, "JSON file with synth parameters");
    synth->add_option("--seed", synth_seed, "Override the seed");
    synth->add_option("--out", synth_out, "Output directory");

    std::string report_a, report_b, compare_out;
    auto *compare = app.add_subcommand("compare", "Field-by-field comparison of two reports");
    compare->add_option("baseline", report_a, "Baseline report.json")->required();
    compare->add_option("other", report_b, "Report to compare against the baseline")->required();
    compare->add_option("--out", compare_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*analyze)
            return run_analyze(analyze_flags);
        if (*exp)
            return run_export(export_flags, format);
        if (*synth)
            return run_synth(synth_config, synth_seed, synth_out);
        if (*compare)
            return run_compare(report_a, report_b, compare_out);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 1;
}
