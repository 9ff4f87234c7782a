// Naive reference computations used only by tests. None of these share code
// with the library algorithms they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hashnet/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const hashnet::DirectedGraph &g, bool undirected) {
    const std::size_t n = g.node_count();
    Matrix a(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) {
        a[u][v] = 1;
        if (undirected)
            a[v][u] = 1;
    }
    return a;
}

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// All-pairs shortest path lengths by Floyd-Warshall.
inline Matrix floyd_warshall(const Matrix &a) {
    const std::size_t n = a.size();
    Matrix d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j])
                d[i][j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    return d;
}

/// Betweenness by enumerating every simple path between every ordered pair
/// and keeping the shortest ones. Undirected mode halves the ordered sum.
inline std::vector<double> brute_force_betweenness(const hashnet::DirectedGraph &g,
                                                   bool undirected) {
    const Matrix a = adjacency(g, undirected);
    const std::size_t n = a.size();
    std::vector<double> bc(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t)
                continue;
            std::vector<std::vector<std::size_t>> paths;
            std::vector<std::size_t> path{s};
            std::vector<bool> on_path(n, false);
            on_path[s] = true;
            std::function<void(std::size_t)> dfs = [&](std::size_t u) {
                if (u == t) {
                    paths.push_back(path);
                    return;
                }
                for (std::size_t w = 0; w < n; ++w) {
                    if (!a[u][w] || on_path[w])
                        continue;
                    on_path[w] = true;
                    path.push_back(w);
                    dfs(w);
                    path.pop_back();
                    on_path[w] = false;
                }
            };
            dfs(s);
            if (paths.empty())
                continue;
            std::size_t shortest = paths.front().size();
            for (const auto &p : paths)
                shortest = std::min(shortest, p.size());
            std::vector<double> through(n, 0.0);
            double count = 0.0;
            for (const auto &p : paths) {
                if (p.size() != shortest)
                    continue;
                count += 1.0;
                for (std::size_t i = 1; i + 1 < p.size(); ++i)
                    through[p[i]] += 1.0;
            }
            for (std::size_t v = 0; v < n; ++v)
                bc[v] += through[v] / count;
        }
    }
    if (undirected)
        for (double &x : bc)
            x /= 2.0;
    return bc;
}

/// Component label per node: the smallest index reachable ignoring direction.
inline std::vector<std::size_t> naive_component_labels(const hashnet::DirectedGraph &g) {
    const Matrix d = floyd_warshall(adjacency(g, true));
    const std::size_t n = d.size();
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) {
        label[i] = i;
        for (std::size_t j = 0; j < n; ++j)
            if (d[i][j] < kInf) {
                label[i] = j;
                break;
            }
    }
    return label;
}

inline std::vector<double> naive_clustering(const hashnet::DirectedGraph &g) {
    const Matrix a = adjacency(g, true);
    const std::size_t n = a.size();
    std::vector<double> c(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> nb;
        for (std::size_t u = 0; u < n; ++u)
            if (a[v][u])
                nb.push_back(u);
        const double k = static_cast<double>(nb.size());
        if (nb.size() < 2)
            continue;
        double links = 0.0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                links += a[nb[i]][nb[j]];
        c[v] = 2.0 * links / (k * (k - 1.0));
    }
    return c;
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> solve(std::vector<std::vector<double>> A, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r][col]) > std::abs(A[pivot][col]))
                pivot = r;
        std::swap(A[col], A[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = A[r][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k)
                A[r][k] -= f * A[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k)
            s -= A[i][k] * x[k];
        x[i] = s / A[i][i];
    }
    return x;
}

/// Exact PageRank fixed point: x = (1-d)/n + d (M x) with dangling columns
/// replaced by the uniform distribution, rewritten as (I - d M) x = (1-d)/n.
inline std::vector<double> pagerank_linear(const hashnet::DirectedGraph &g, double damping) {
    const Matrix a = adjacency(g, false);
    const std::size_t n = a.size();
    std::vector<std::vector<double>> M(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        int out = 0;
        for (std::size_t v = 0; v < n; ++v)
            out += a[u][v];
        for (std::size_t v = 0; v < n; ++v)
            M[v][u] = out == 0 ? 1.0 / static_cast<double>(n) : a[u][v] / static_cast<double>(out);
    }
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A[i][j] = (i == j ? 1.0 : 0.0) - damping * M[i][j];
    return solve(A, std::vector<double>(n, (1.0 - damping) / static_cast<double>(n)));
}

/// Random directed simple graph with 1..max_nodes nodes, labels inserted in
/// shuffled order so node index and id order differ.
inline hashnet::DirectedGraph random_graph(std::mt19937_64 &rng, std::size_t max_nodes,
                                           double max_density = 0.6) {
    std::uniform_int_distribution<std::size_t> size(1, max_nodes);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n = size(rng);
    const double p = unit(rng) * max_density;
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = i;
    std::shuffle(labels.begin(), labels.end(), rng);
    hashnet::GraphBuilder b;
    for (std::size_t i : labels)
        b.add_node("n" + std::to_string(i));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && unit(rng) < p)
                b.add_edge("n" + std::to_string(u), "n" + std::to_string(v));
    return std::move(b).build();
}

/// Builds a graph from "a>b" style edge specs plus optional isolated nodes.
inline hashnet::DirectedGraph graph_of(const std::vector<std::pair<std::string, std::string>> &edges,
                                       const std::vector<std::string> &isolated = {}) {
    hashnet::GraphBuilder b;
    for (const auto &[s, t] : edges)
        b.add_edge(s, t);
    for (const auto &id : isolated)
        b.add_node(id);
    return std::move(b).build();
}

} // namespace oracle
