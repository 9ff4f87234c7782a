#include "hashnet/config.hpp"

#include <fstream>

#include "hashnet/error.hpp"

namespace hashnet {

namespace {

using nlohmann::json;

template <typename T>
void read(const json &obj, const char *key, T &target, const std::string &section) {
    if (!obj.contains(key))
        return;
    try {
        target = obj.at(key).get<T>();
    } catch (const json::exception &) {
        throw ValidationError(section + "." + key, "has the wrong type");
    }
}

const json &section(const json &doc, const char *name) {
    static const json empty = json::object();
    if (!doc.contains(name))
        return empty;
    const json &s = doc.at(name);
    if (!s.is_object())
        throw ValidationError(name, "must be an object");
    return s;
}

std::filesystem::path resolve(const std::string &p, const std::filesystem::path &base) {
    std::filesystem::path path(p);
    return path.is_relative() && !base.empty() ? base / path : path;
}

} // namespace

void RunConfig::validate() const {
    if (tweets.empty())
        throw ValidationError("inputs.tweets", "path is required");
    if (accounts.empty())
        throw ValidationError("inputs.accounts", "path is required");
    if (follows.empty())
        throw ValidationError("inputs.follows", "path is required");
    if (output_dir.empty())
        throw ValidationError("output_dir", "path is required");
    if (layers.empty())
        throw ValidationError("analysis.layers", "at least one layer is required");
    if (top_k < 1)
        throw ValidationError("analysis.top_k", "must be at least 1");
    if (histogram_bins < 1)
        throw ValidationError("analysis.histogram_bins", "must be at least 1");
    if (!(metrics.pagerank_damping >= 0.0 && metrics.pagerank_damping <= 1.0))
        throw ValidationError("analysis.pagerank_damping", "must lie in [0, 1]");
    if (!(metrics.pagerank.tolerance > 0.0))
        throw ValidationError("analysis.pagerank_tolerance", "must be > 0");
    if (!(metrics.eigenvector.tolerance > 0.0))
        throw ValidationError("analysis.eigenvector_tolerance", "must be > 0");
    if (metrics.workers < 1)
        throw ValidationError("analysis.workers", "must be at least 1");
    filter.validate();
}

void apply_run_config(RunConfig &config, const json &doc, const std::filesystem::path &base_dir) {
    if (!doc.is_object())
        throw ValidationError("config", "must be a JSON object");

    const json &in = section(doc, "inputs");
    std::string path;
    for (auto [key, target] : {std::pair{"tweets", &config.tweets},
                               std::pair{"accounts", &config.accounts},
                               std::pair{"follows", &config.follows}}) {
        path.clear();
        read(in, key, path, "inputs");
        if (!path.empty())
            *target = resolve(path, base_dir);
    }
    path.clear();
    read(in, "exclusions", path, "inputs");
    if (!path.empty())
        config.exclusions = resolve(path, base_dir);

    const json &f = section(doc, "filter");
    read(f, "include_hashtag", config.filter.include_hashtag, "filter");
    read(f, "exclude_terms", config.filter.exclude_terms, "filter");
    read(f, "window_start", config.filter.window_start, "filter");
    read(f, "window_end", config.filter.window_end, "filter");

    const json &a = section(doc, "analysis");
    std::string text;
    read(a, "layers", text, "analysis");
    if (!text.empty()) {
        try {
            config.layers = parse_relation_kinds(text);
        } catch (const UsageError &e) {
            throw ValidationError("analysis.layers", e.what());
        }
    }
    auto mode = [&](const char *key, auto parse, auto &target) {
        std::string value;
        read(a, key, value, "analysis");
        if (value.empty())
            return;
        auto parsed = parse(value);
        if (!parsed)
            throw ValidationError(std::string("analysis.") + key, "unknown mode '" + value + "'");
        target = *parsed;
    };
    mode("betweenness_mode", parse_path_mode, config.metrics.betweenness_mode);
    mode("geodesic_mode", parse_path_mode, config.metrics.geodesic_mode);
    mode("eigenvector_mode", parse_eigen_mode, config.metrics.eigenvector_mode);
    read(a, "eigenvector_tolerance", config.metrics.eigenvector.tolerance, "analysis");
    read(a, "eigenvector_max_iterations", config.metrics.eigenvector.max_iterations, "analysis");
    read(a, "pagerank_damping", config.metrics.pagerank_damping, "analysis");
    read(a, "pagerank_tolerance", config.metrics.pagerank.tolerance, "analysis");
    read(a, "pagerank_max_iterations", config.metrics.pagerank.max_iterations, "analysis");
    read(a, "top_k", config.top_k, "analysis");
    read(a, "histogram_bins", config.histogram_bins, "analysis");
    read(a, "workers", config.metrics.workers, "analysis");

    const json &t = section(doc, "thresholds");
    read(t, "high_center_max_over_mean", config.thresholds.high_center_max_over_mean, "thresholds");
    read(t, "interactivity_edge_ratio", config.thresholds.interactivity_edge_ratio, "thresholds");
    read(t, "main_component_node_share", config.thresholds.main_component_node_share, "thresholds");
    read(t, "url_tweet_fraction", config.thresholds.url_tweet_fraction, "thresholds");

    for (const auto &[k, v] : section(doc, "narrative").items()) {
        if (!v.is_string())
            throw ValidationError("narrative." + k, "must be a string");
        config.narrative[k] = v.get<std::string>();
    }

    path.clear();
    read(doc, "output_dir", path, "config");
    if (!path.empty())
        config.output_dir = resolve(path, base_dir);
}

SynthConfig synth_config_from_json(const json &doc) {
    const json &s = doc.contains("synth") ? section(doc, "synth") : doc;
    SynthConfig c;
    const std::string name = "synth";
    read(s, "seed", c.seed, name);
    read(s, "account_count", c.account_count, name);
    if (s.contains("category_mix")) {
        const json &m = s.at("category_mix");
        if (!m.is_object())
            throw ValidationError("synth.category_mix", "must be an object");
        read(m, "ORG", c.category_mix.org, "synth.category_mix");
        read(m, "JMB", c.category_mix.jmb, "synth.category_mix");
        read(m, "OI", c.category_mix.oi, "synth.category_mix");
        read(m, "OTHER", c.category_mix.other, "synth.category_mix");
    }
    read(s, "follow_attachment_exponent", c.follow_attachment_exponent, name);
    read(s, "follow_edges_target", c.follow_edges_target, name);
    read(s, "tweets_per_account_mean", c.tweets_per_account_mean, name);
    read(s, "mention_rate", c.mention_rate, name);
    read(s, "retweet_rate", c.retweet_rate, name);
    read(s, "reply_rate", c.reply_rate, name);
    read(s, "url_rate", c.url_rate, name);
    read(s, "hashtag", c.hashtag, name);
    read(s, "window_start", c.window_start, name);
    read(s, "window_end", c.window_end, name);
    c.validate();
    return c;
}

json load_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

} // namespace hashnet
