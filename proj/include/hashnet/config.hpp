#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "hashnet/centrality.hpp"
#include "hashnet/community.hpp"
#include "hashnet/network.hpp"
#include "hashnet/records.hpp"
#include "hashnet/synth.hpp"

namespace hashnet {

/// Settings for one analysis run.
struct RunConfig {
    std::filesystem::path tweets;
    std::filesystem::path accounts;
    std::filesystem::path follows;
    std::optional<std::filesystem::path> exclusions;

    FilterQuery filter; // exclude_tweet_ids come from `exclusions` at run time
    std::set<RelationKind> layers{RelationKind::Follows};
    SummaryOptions metrics;
    std::size_t top_k = 20;
    std::size_t histogram_bins = 20;
    CommunityThresholds thresholds;
    NarrativeFields narrative = default_narrative_fields();
    std::filesystem::path output_dir;

    /// Throws ValidationError.
    void validate() const;
};

/// Overlays the keys present in `doc` on `config`. Relative paths resolve
/// against `base_dir`. Throws ValidationError on wrongly typed values.
///
/// Layout:
///   { "inputs": {"tweets", "accounts", "follows", "exclusions"},
///     "filter": {"include_hashtag", "exclude_terms", "window_start", "window_end"},
///     "analysis": {"layers", "betweenness_mode", "geodesic_mode", "eigenvector_mode",
///                  "eigenvector_tolerance", "eigenvector_max_iterations",
///                  "pagerank_damping", "pagerank_tolerance", "pagerank_max_iterations",
///                  "top_k", "histogram_bins", "workers"},
///     "thresholds": {...CommunityThresholds fields...},
///     "narrative": {"common_language": "...", ...},
///     "output_dir": "...",
///     "synth": {...SynthConfig fields...} }
void apply_run_config(RunConfig &config, const nlohmann::json &doc,
                      const std::filesystem::path &base_dir);

/// Reads the "synth" section (or the whole document when it has none).
SynthConfig synth_config_from_json(const nlohmann::json &doc);

/// Parses a JSON file; throws InputError when unreadable or invalid.
nlohmann::json load_json_file(const std::filesystem::path &path);

} // namespace hashnet
