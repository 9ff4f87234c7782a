#pragma once

#include <exception>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hashnet/config.hpp"
#include "hashnet/ingest.hpp"
#include "hashnet/report.hpp"

namespace hashnet {

struct LoadedCorpus {
    std::vector<TweetRecord> tweets;
    SupportData support;
    std::set<std::string> excluded_ids;
};

/// Reads the corpus files named in the config. Throws InputError when a file
/// cannot be opened; parse errors carry the file name.
LoadedCorpus load_corpus(const RunConfig &config);

/// Output file name -> contents.
using OutputTree = std::map<std::string, std::string>;

struct AnalysisRun {
    AnalysisReport report;
    OutputTree files;
};

/// Ingest, build, measure and assess, entirely in memory.
///
/// Produces report.json, report.txt, metrics.csv, distributions.json,
/// network.{graphml,dot}, network_edges.csv, layer_{F,M,R}_edges.csv and a
/// manifest.json listing them. Throws on any module error.
AnalysisRun run_analysis(const RunConfig &config);

/// Writes every file into `dir`, creating it if needed. If any write fails the
/// files written so far are removed and InputError is thrown.
void write_output_tree(const OutputTree &files, const std::filesystem::path &dir);

/// 2 for convergence and undefined-metric/ratio errors, 1 for everything else.
int exit_code_for(const std::exception &e);

/// Formats a layer set as "F", "M+R", ...
std::string layer_label(const std::set<RelationKind> &kinds);

} // namespace hashnet
