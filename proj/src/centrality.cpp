#include "hashnet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hashnet/components.hpp"
#include "hashnet/error.hpp"
#include "parallel.hpp"

namespace hashnet {

namespace {

MetricVector make_vector(const DirectedGraph &g, Metric metric) {
    MetricVector v;
    v.metric = metric;
    v.ids = g.node_ids();
    v.values.assign(g.node_count(), 0.0);
    return v;
}

// Neighbors to expand during a shortest-path search, and the reverse
// relation used to find predecessors.
struct PathAdjacency {
    Adjacency forward;
    Adjacency backward;
};

PathAdjacency path_adjacency(const DirectedGraph &g, PathMode mode) {
    if (mode == PathMode::Directed)
        return {g.out(), g.in()};
    Adjacency und = g.undirected();
    return {und, und};
}

} // namespace

std::string_view to_string(Metric m) {
    switch (m) {
    case Metric::InDegree:
        return "in_degree";
    case Metric::OutDegree:
        return "out_degree";
    case Metric::Betweenness:
        return "betweenness";
    case Metric::Eigenvector:
        return "eigenvector";
    case Metric::PageRank:
        return "pagerank";
    case Metric::Clustering:
        return "clustering";
    }
    return "unknown";
}

std::optional<Metric> parse_metric(std::string_view s) {
    for (Metric m : {Metric::InDegree, Metric::OutDegree, Metric::Betweenness, Metric::Eigenvector,
                     Metric::PageRank, Metric::Clustering})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

std::string_view to_string(PathMode m) {
    return m == PathMode::Directed ? "directed" : "undirected";
}

std::string_view to_string(EigenMode m) {
    return m == EigenMode::DirectedIn ? "directed_in" : "undirected";
}

std::optional<PathMode> parse_path_mode(std::string_view s) {
    if (s == "directed")
        return PathMode::Directed;
    if (s == "undirected")
        return PathMode::Undirected;
    return std::nullopt;
}

std::optional<EigenMode> parse_eigen_mode(std::string_view s) {
    if (s == "directed_in")
        return EigenMode::DirectedIn;
    if (s == "undirected")
        return EigenMode::Undirected;
    return std::nullopt;
}

double MetricVector::at(std::string_view id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id)
            return values[i];
    throw std::out_of_range("no value for node '" + std::string(id) + "'");
}

double MetricVector::sum() const {
    double s = 0.0;
    for (double x : values)
        s += x;
    return s;
}

double MetricVector::mean() const {
    if (values.empty())
        throw UndefinedMetricError("mean of an empty metric vector");
    return sum() / static_cast<double>(values.size());
}

DegreeStats degree_stats(const DirectedGraph &g) {
    DegreeStats d{make_vector(g, Metric::InDegree), make_vector(g, Metric::OutDegree)};
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        d.in.values[v] = static_cast<double>(g.in().degree(v));
        d.out.values[v] = static_cast<double>(g.out().degree(v));
    }
    return d;
}

double graph_density(std::size_t node_count, std::size_t edge_count) {
    if (node_count < 2)
        throw UndefinedMetricError("density needs at least 2 nodes");
    const double n = static_cast<double>(node_count);
    return static_cast<double>(edge_count) / (n * (n - 1.0));
}

double graph_density(const DirectedGraph &g) {
    return graph_density(g.node_count(), g.edge_count());
}

GeodesicStats geodesic_stats(const DirectedGraph &g, PathMode mode, unsigned workers) {
    const std::size_t n = g.node_count();
    const Adjacency adj = mode == PathMode::Directed ? g.out() : g.undirected();

    struct Partial {
        std::uint64_t total = 0;
        std::uint64_t pairs = 0;
        std::uint32_t longest = 0;
    };
    detail::Blocks blocks(n);
    std::vector<Partial> partials(blocks.count());

    detail::parallel_for(blocks.count(), workers, [&](std::size_t b) {
        std::vector<std::int32_t> dist(n, -1);
        std::vector<NodeIndex> queue;
        queue.reserve(n);
        Partial &p = partials[b];
        for (std::size_t s = blocks.begin(b); s < blocks.end(b); ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            queue.clear();
            dist[s] = 0;
            queue.push_back(static_cast<NodeIndex>(s));
            for (std::size_t head = 0; head < queue.size(); ++head) {
                NodeIndex u = queue[head];
                for (NodeIndex w : adj[u]) {
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                        p.total += static_cast<std::uint64_t>(dist[w]);
                        ++p.pairs;
                        p.longest = std::max(p.longest, static_cast<std::uint32_t>(dist[w]));
                    }
                }
            }
        }
    });

    GeodesicStats stats;
    std::uint64_t total = 0;
    for (const auto &p : partials) {
        total += p.total;
        stats.reachable_pairs += p.pairs;
        stats.diameter = std::max(stats.diameter, p.longest);
    }
    if (stats.reachable_pairs == 0)
        throw UndefinedMetricError("no reachable node pairs; geodesic distance undefined");
    stats.average = static_cast<double>(total) / static_cast<double>(stats.reachable_pairs);
    return stats;
}

MetricVector betweenness_centrality(const DirectedGraph &g, PathMode mode, unsigned workers) {
    const std::size_t n = g.node_count();
    MetricVector result = make_vector(g, Metric::Betweenness);
    if (n == 0)
        return result;
    const PathAdjacency adj = path_adjacency(g, mode);

    // Each block of sources accumulates into its own vector; blocks are summed
    // in order afterwards so the floating-point result ignores scheduling.
    detail::Blocks blocks(n);
    std::vector<std::vector<double>> partials(blocks.count());

    detail::parallel_for(blocks.count(), workers, [&](std::size_t b) {
        std::vector<double> acc(n, 0.0);
        std::vector<double> sigma(n);
        std::vector<double> delta(n);
        std::vector<std::int32_t> dist(n);
        std::vector<NodeIndex> order;
        order.reserve(n);

        for (std::size_t s = blocks.begin(b); s < blocks.end(b); ++s) {
            std::fill(sigma.begin(), sigma.end(), 0.0);
            std::fill(delta.begin(), delta.end(), 0.0);
            std::fill(dist.begin(), dist.end(), -1);
            order.clear();

            sigma[s] = 1.0;
            dist[s] = 0;
            order.push_back(static_cast<NodeIndex>(s));
            for (std::size_t head = 0; head < order.size(); ++head) {
                NodeIndex v = order[head];
                for (NodeIndex w : adj.forward[v]) {
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        order.push_back(w);
                    }
                    if (dist[w] == dist[v] + 1)
                        sigma[w] += sigma[v];
                }
            }

            for (std::size_t i = order.size(); i-- > 1;) {
                NodeIndex w = order[i];
                const double coeff = (1.0 + delta[w]) / sigma[w];
                for (NodeIndex v : adj.backward[w])
                    if (dist[v] >= 0 && dist[v] == dist[w] - 1)
                        delta[v] += sigma[v] * coeff;
                acc[w] += delta[w];
            }
        }
        partials[b] = std::move(acc);
    });

    for (const auto &part : partials)
        for (std::size_t v = 0; v < n; ++v)
            result.values[v] += part[v];
    if (mode == PathMode::Undirected)
        for (double &x : result.values)
            x /= 2.0;
    return result;
}

MetricVector eigenvector_centrality(const DirectedGraph &g, EigenMode mode,
                                    IterationOptions options, unsigned workers) {
    if (g.edge_count() == 0)
        throw UndefinedMetricError("eigenvector centrality needs at least one edge");
    const std::size_t n = g.node_count();
    const Adjacency adj = mode == EigenMode::DirectedIn ? g.in() : g.undirected();

    MetricVector result = make_vector(g, Metric::Eigenvector);
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> y(n);
    detail::Blocks blocks(n, 256);
    double residual = std::numeric_limits<double>::infinity();

    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        detail::parallel_for(blocks.count(), workers, [&](std::size_t b) {
            for (std::size_t v = blocks.begin(b); v < blocks.end(b); ++v) {
                double s = x[v];
                for (NodeIndex u : adj[static_cast<NodeIndex>(v)])
                    s += x[u];
                y[v] = s;
            }
        });
        double total = 0.0;
        for (double val : y)
            total += val;
        residual = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            y[v] /= total;
            residual = std::max(residual, std::abs(y[v] - x[v]));
        }
        std::swap(x, y);
        if (residual < options.tolerance) {
            result.values = std::move(x);
            return result;
        }
    }
    throw ConvergenceError("eigenvector centrality did not converge in " +
                               std::to_string(options.max_iterations) + " iterations",
                           residual);
}

MetricVector pagerank(const DirectedGraph &g, double damping, IterationOptions options,
                      unsigned workers) {
    const std::size_t n = g.node_count();
    if (n == 0)
        throw UndefinedMetricError("pagerank of an empty graph");
    if (!(damping >= 0.0 && damping <= 1.0))
        throw UsageError("damping must lie in [0, 1]");

    const double inv_n = 1.0 / static_cast<double>(n);
    MetricVector result = make_vector(g, Metric::PageRank);
    std::vector<double> x(n, inv_n);
    std::vector<double> share(n);
    std::vector<double> y(n);
    detail::Blocks blocks(n, 256);
    double residual = std::numeric_limits<double>::infinity();

    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        double dangling = 0.0;
        for (NodeIndex u = 0; u < n; ++u) {
            const std::size_t deg = g.out().degree(u);
            if (deg == 0) {
                dangling += x[u];
                share[u] = 0.0;
            } else {
                share[u] = x[u] / static_cast<double>(deg);
            }
        }
        const double base = (1.0 - damping) * inv_n + damping * dangling * inv_n;

        detail::parallel_for(blocks.count(), workers, [&](std::size_t b) {
            for (std::size_t v = blocks.begin(b); v < blocks.end(b); ++v) {
                double s = 0.0;
                for (NodeIndex u : g.in_neighbors(static_cast<NodeIndex>(v)))
                    s += share[u];
                y[v] = base + damping * s;
            }
        });

        residual = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            residual += std::abs(y[v] - x[v]);
        std::swap(x, y);
        if (residual < options.tolerance) {
            double total = 0.0;
            for (double val : x)
                total += val;
            for (double &val : x)
                val /= total;
            result.values = std::move(x);
            return result;
        }
    }
    throw ConvergenceError("pagerank did not converge in " +
                               std::to_string(options.max_iterations) + " iterations",
                           residual);
}

ClusteringResult clustering_coefficients(const DirectedGraph &g, unsigned workers) {
    const std::size_t n = g.node_count();
    ClusteringResult r{make_vector(g, Metric::Clustering), 0.0};
    if (n == 0)
        return r;
    const Adjacency und = g.undirected();

    detail::Blocks blocks(n, 256);
    detail::parallel_for(blocks.count(), workers, [&](std::size_t b) {
        for (std::size_t v = blocks.begin(b); v < blocks.end(b); ++v) {
            auto nbrs = und[static_cast<NodeIndex>(v)];
            const std::size_t k = nbrs.size();
            if (k < 2)
                continue;
            std::size_t links = 0;
            for (NodeIndex a : nbrs) {
                auto an = und[a];
                // Count neighbors b of v with b > a that are adjacent to a.
                auto lo = std::upper_bound(nbrs.begin(), nbrs.end(), a);
                auto alo = std::upper_bound(an.begin(), an.end(), a);
                auto i = lo;
                auto j = alo;
                while (i != nbrs.end() && j != an.end()) {
                    if (*i < *j)
                        ++i;
                    else if (*j < *i)
                        ++j;
                    else {
                        ++links;
                        ++i;
                        ++j;
                    }
                }
            }
            r.local.values[v] = 2.0 * static_cast<double>(links) /
                                (static_cast<double>(k) * static_cast<double>(k - 1));
        }
    });
    r.average = r.local.mean();
    return r;
}

std::vector<std::pair<std::string, double>> top_k_nodes(const MetricVector &v, std::size_t k) {
    if (k < 1)
        throw UsageError("top-k size must be at least 1");
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    const std::size_t take = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (v.values[a] != v.values[b])
                              return v.values[a] > v.values[b];
                          return v.ids[a] < v.ids[b];
                      });
    std::vector<std::pair<std::string, double>> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i)
        out.emplace_back(v.ids[idx[i]], v.values[idx[i]]);
    return out;
}

Distribution metric_distribution(const MetricVector &v, std::size_t bin_count) {
    if (bin_count < 1)
        throw UsageError("bin count must be at least 1");
    if (v.values.empty())
        throw UndefinedMetricError("distribution of an empty metric vector");

    const auto [lo_it, hi_it] = std::minmax_element(v.values.begin(), v.values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;

    Distribution d;
    d.bin_width = (hi - lo) / static_cast<double>(bin_count);
    std::vector<std::size_t> counts(bin_count, 0);
    for (double x : v.values) {
        std::size_t bin = 0;
        if (d.bin_width > 0.0)
            bin = std::min(bin_count - 1, static_cast<std::size_t>((x - lo) / d.bin_width));
        ++counts[bin];
    }
    for (std::size_t b = 0; b < bin_count; ++b)
        d.histogram.emplace_back(lo + static_cast<double>(b) * d.bin_width, counts[b]);

    std::vector<double> sorted = v.values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const double total = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        // Emit at the last occurrence so the count covers every tie.
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i])
            continue;
        d.ccdf.emplace_back(sorted[i], static_cast<double>(i + 1) / total);
    }
    return d;
}

std::vector<const MetricVector *> MetricSuite::vectors() const {
    std::vector<const MetricVector *> out{&degree.in, &degree.out, &betweenness};
    if (eigenvector)
        out.push_back(&*eigenvector);
    if (pagerank)
        out.push_back(&*pagerank);
    out.push_back(&clustering.local);
    return out;
}

MetricSuite compute_metric_suite(const DirectedGraph &g, const SummaryOptions &options) {
    MetricSuite suite;
    suite.degree = degree_stats(g);
    suite.betweenness = betweenness_centrality(g, options.betweenness_mode, options.workers);
    if (g.edge_count() > 0)
        suite.eigenvector = eigenvector_centrality(g, options.eigenvector_mode, options.eigenvector,
                                                   options.workers);
    if (g.node_count() > 0)
        suite.pagerank = pagerank(g, options.pagerank_damping, options.pagerank, options.workers);
    suite.clustering = clustering_coefficients(g, options.workers);

    NetworkSummary &s = suite.summary;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    if (g.node_count() >= 2)
        s.density = graph_density(g);
    s.component_count = weakly_connected_components(g).count();
    try {
        auto geo = geodesic_stats(g, options.geodesic_mode, options.workers);
        s.avg_geodesic_distance = geo.average;
        s.diameter = geo.diameter;
    } catch (const UndefinedMetricError &) {
    }
    if (g.node_count() > 0) {
        s.avg_betweenness = suite.betweenness.mean();
        s.avg_clustering = suite.clustering.average;
    }
    if (suite.eigenvector)
        s.avg_eigenvector = suite.eigenvector->mean();
    return suite;
}

NetworkSummary network_summary(const DirectedGraph &g, const SummaryOptions &options) {
    return compute_metric_suite(g, options).summary;
}

} // namespace hashnet
