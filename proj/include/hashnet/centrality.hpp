#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hashnet/graph.hpp"

namespace hashnet {

enum class Metric { InDegree, OutDegree, Betweenness, Eigenvector, PageRank, Clustering };

std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view s);

/// One value per graph node, aligned with the graph's node order.
struct MetricVector {
    Metric metric = Metric::InDegree;
    std::vector<std::string> ids;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    /// Throws std::out_of_range for an unknown id.
    double at(std::string_view id) const;
    double sum() const; // in node order
    double mean() const;
};

/// Shortest paths over edge direction, or over the underlying undirected graph.
enum class PathMode { Directed, Undirected };

/// Eigenvector centrality over in-neighbors, or over the undirected adjacency.
enum class EigenMode { DirectedIn, Undirected };

std::string_view to_string(PathMode m);
std::string_view to_string(EigenMode m);
std::optional<PathMode> parse_path_mode(std::string_view s);
std::optional<EigenMode> parse_eigen_mode(std::string_view s);

struct IterationOptions {
    double tolerance = 1e-10;
    std::size_t max_iterations = 200;
};

struct DegreeStats {
    MetricVector in;
    MetricVector out;
};

DegreeStats degree_stats(const DirectedGraph &g);

/// E / (N (N - 1)). Throws UndefinedMetricError for N < 2.
double graph_density(std::size_t node_count, std::size_t edge_count);
double graph_density(const DirectedGraph &g);

struct GeodesicStats {
    double average = 0.0;
    std::uint32_t diameter = 0;
    std::uint64_t reachable_pairs = 0; // ordered pairs with finite distance > 0
};

/// BFS over all sources. Unreachable pairs are left out of both the average
/// and the diameter. Throws UndefinedMetricError when no pair is reachable.
GeodesicStats geodesic_stats(const DirectedGraph &g, PathMode mode = PathMode::Undirected,
                             unsigned workers = 1);

/// Unnormalized shortest-path betweenness (Brandes accumulation).
///
/// Directed mode sums over ordered source/target pairs. Undirected mode walks
/// the underlying undirected graph and counts each unordered pair once.
/// Results are bit-identical for any worker count.
MetricVector betweenness_centrality(const DirectedGraph &g, PathMode mode = PathMode::Directed,
                                    unsigned workers = 1);

/// Dominant eigenvector by power iteration, normalized to sum 1.
///
/// Iterates x <- (A + I) x, which shares A's dominant eigenvector and does not
/// oscillate on bipartite graphs. Stops when the max-abs change between
/// successive normalized iterates drops below the tolerance.
/// Throws UndefinedMetricError on an edgeless graph and ConvergenceError when
/// max_iterations is exhausted.
MetricVector eigenvector_centrality(const DirectedGraph &g, EigenMode mode = EigenMode::Undirected,
                                    IterationOptions options = {1e-10, 1000},
                                    unsigned workers = 1);

/// Damped random-surfer scores summing to 1. Dangling mass is spread
/// uniformly over all nodes each iteration; convergence is on the L1 change.
/// Throws UndefinedMetricError on an empty graph, ConvergenceError otherwise.
MetricVector pagerank(const DirectedGraph &g, double damping = 0.85,
                      IterationOptions options = {1e-10, 200}, unsigned workers = 1);

struct ClusteringResult {
    MetricVector local;
    double average = 0.0; // over all nodes; 0 for an empty graph
};

/// Local clustering on the underlying undirected simple graph; nodes of
/// degree < 2 score 0 and still count toward the average.
ClusteringResult clustering_coefficients(const DirectedGraph &g, unsigned workers = 1);

/// Highest k values, descending, ties by ascending id. Throws UsageError for k < 1.
std::vector<std::pair<std::string, double>> top_k_nodes(const MetricVector &v, std::size_t k = 20);

struct Distribution {
    double bin_width = 0.0;
    std::vector<std::pair<double, std::size_t>> histogram; // (bin lower bound, count)
    std::vector<std::pair<double, double>> ccdf;           // (value, fraction >= value), descending
};

/// Equal-width histogram over [min, max] plus the empirical CCDF at every
/// distinct value. Throws UndefinedMetricError on an empty vector.
Distribution metric_distribution(const MetricVector &v, std::size_t bin_count);

struct SummaryOptions {
    PathMode geodesic_mode = PathMode::Undirected;
    PathMode betweenness_mode = PathMode::Directed;
    EigenMode eigenvector_mode = EigenMode::Undirected;
    IterationOptions eigenvector{1e-10, 1000};
    double pagerank_damping = 0.85;
    IterationOptions pagerank{1e-10, 200};
    unsigned workers = 1;
};

/// Network-wide figures. Fields that are undefined on the graph (density
/// with N < 2, distances with no reachable pair, eigenvector centrality of an
/// edgeless graph, averages over zero nodes) are empty.
struct NetworkSummary {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::optional<double> density;
    std::size_t component_count = 0;
    std::optional<double> avg_geodesic_distance;
    std::optional<std::uint32_t> diameter;
    std::optional<double> avg_betweenness;
    std::optional<double> avg_eigenvector;
    std::optional<double> avg_clustering;

    bool operator==(const NetworkSummary &) const = default;
};

/// Every per-node vector plus the summary built from them.
struct MetricSuite {
    DegreeStats degree;
    MetricVector betweenness;
    std::optional<MetricVector> eigenvector;
    std::optional<MetricVector> pagerank;
    ClusteringResult clustering;
    NetworkSummary summary;

    /// The vectors that exist, in IN, OUT, BETWEENNESS, EIGENVECTOR,
    /// PAGERANK, CLUSTERING order.
    std::vector<const MetricVector *> vectors() const;
};

/// Computes all metrics. Undefined-metric conditions leave the affected
/// fields empty; ConvergenceError propagates.
MetricSuite compute_metric_suite(const DirectedGraph &g, const SummaryOptions &options = {});

NetworkSummary network_summary(const DirectedGraph &g, const SummaryOptions &options = {});

} // namespace hashnet
