#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "hashnet/centrality.hpp"
#include "hashnet/community.hpp"

namespace hashnet {

/// Version stamped into every output file.
inline constexpr int kSchemaVersion = 1;

struct LayerSize {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    bool operator==(const LayerSize &) const = default;
};

struct CorpusStats {
    std::size_t tweets_read = 0;
    std::size_t tweets_retained = 0;
    std::size_t core_tweeters = 0;
    std::size_t rejected_rows = 0;
    bool operator==(const CorpusStats &) const = default;
};

struct AnalysisSettings {
    std::string layers = "F";
    PathMode betweenness_mode = PathMode::Directed;
    PathMode geodesic_mode = PathMode::Undirected;
    EigenMode eigenvector_mode = EigenMode::Undirected;
    double pagerank_damping = 0.85;
    std::size_t top_k = 20;
    bool operator==(const AnalysisSettings &) const = default;
};

/// Everything the machine-readable report holds.
struct AnalysisReport {
    int schema_version = kSchemaVersion;
    AnalysisSettings settings;
    CorpusStats corpus;
    std::map<char, LayerSize> layers; // keyed 'F', 'M', 'R'
    NetworkSummary summary;
    CommunityIndicators community;
    CommunityThresholds thresholds;
    std::map<Metric, TopList> top_nodes;

    bool operator==(const AnalysisReport &) const = default;
};

/// Undefined values are written as null.
nlohmann::ordered_json to_json(const AnalysisReport &report);
/// Inverse of to_json. Throws VersionError on a missing or foreign schema
/// version and ParseError on a malformed document.
AnalysisReport report_from_json(const nlohmann::json &doc);

/// Table-style text rendering; undefined values print as "undefined".
std::string render_text(const AnalysisReport &report);

/// Formats a fraction as a percentage with one decimal ("42.9%").
std::string percent(double fraction);

/// Field-by-field comparison of two machine-readable reports, `a` being the
/// baseline: for each numeric leaf the absolute delta b - a and the relative
/// delta (b - a) / |a|. Fields found in only one report are flagged "added"
/// or "removed". Throws VersionError when schema versions differ.
nlohmann::ordered_json compare_reports(const nlohmann::json &a, const nlohmann::json &b);

} // namespace hashnet
