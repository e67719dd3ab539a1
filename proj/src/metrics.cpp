#include "neatflow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "neatflow/errors.hpp"
#include "neatflow/genome.hpp"

namespace neatflow {

std::size_t NetGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : neighbors) twice += nb.size();
    return twice / 2;
}

bool NetGraph::has_edge(std::size_t i, std::size_t j) const {
    const auto& nb = neighbors[i];
    return std::binary_search(nb.begin(), nb.end(), static_cast<int>(j));
}

NetGraph graph_from_edges(std::size_t node_count,
                          const std::vector<std::pair<int, int>>& edges) {
    NetGraph g;
    g.node_ids.resize(node_count);
    std::iota(g.node_ids.begin(), g.node_ids.end(), 0);
    g.neighbors.assign(node_count, {});
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a == b) continue;
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) continue;
        g.neighbors[a].push_back(b);
        g.neighbors[b].push_back(a);
    }
    for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
    return g;
}

NetGraph build_graph(const Genome& genome) {
    NetGraph g;
    g.node_ids.reserve(genome.nodes.size());
    std::map<int, int> index_of;
    for (const auto& node : genome.nodes) {
        index_of[node.id] = static_cast<int>(g.node_ids.size());
        g.node_ids.push_back(node.id);
    }
    g.neighbors.assign(g.node_ids.size(), {});
    std::set<std::pair<int, int>> seen;
    for (const auto& c : genome.connections) {
        if (!c.enabled || c.from == c.to) continue;
        int a = index_of.at(c.from);
        int b = index_of.at(c.to);
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) continue;
        g.neighbors[a].push_back(b);
        g.neighbors[b].push_back(a);
    }
    for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
    return g;
}

DistanceMatrix shortest_paths(const NetGraph& g) {
    const std::size_t n = g.node_count();
    DistanceMatrix m;
    m.n = n;
    m.dist.assign(n * n, kUnreachable);
    std::deque<int> queue;
    for (std::size_t src = 0; src < n; ++src) {
        int* row = m.dist.data() + src * n;
        row[src] = 0;
        queue.clear();
        queue.push_back(static_cast<int>(src));
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors[u]) {
                if (row[v] == kUnreachable) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return m;
}

namespace {

double efficiency_from_distances(const DistanceMatrix& m) {
    const std::size_t n = m.n;
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            int d = m.at(i, j);
            if (d != kUnreachable) sum += 1.0 / d;
        }
    return sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

} // namespace

double global_efficiency(const NetGraph& g) {
    return efficiency_from_distances(shortest_paths(g));
}

double local_efficiency(const NetGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& nb = g.neighbors[i];
        const std::size_t k = nb.size();
        if (k < 2) continue;
        // subgraph induced on the neighbors of i
        std::vector<std::pair<int, int>> edges;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (g.has_edge(nb[a], nb[b]))
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        sum += global_efficiency(graph_from_edges(k, edges));
    }
    return sum / static_cast<double>(n);
}

DegreeCentralityResult degree_centrality(const NetGraph& g) {
    DegreeCentralityResult r;
    const std::size_t n = g.node_count();
    r.per_node.assign(n, 0.0);
    if (n == 0) return r;
    if (n >= 2) {
        for (std::size_t i = 0; i < n; ++i)
            r.per_node[i] = static_cast<double>(g.degree(i)) / static_cast<double>(n - 1);
    }
    r.aggregate = std::accumulate(r.per_node.begin(), r.per_node.end(), 0.0) /
                  static_cast<double>(n);
    return r;
}

EigenvectorCentralityResult eigenvector_centrality(const NetGraph& g, double tol,
                                                   int max_iter) {
    const std::size_t n = g.node_count();
    if (n == 0) throw EmptyGraph("eigenvector centrality of an empty graph");
    EigenvectorCentralityResult r;
    if (g.edge_count() == 0) {
        r.per_node.assign(n, 0.0);
        return r; // aggregate 0, converged false
    }
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    for (int it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = x[i]; // +I shift keeps the Perron mode dominant
            for (int j : g.neighbors[i]) acc += x[j];
            y[i] = acc;
        }
        double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] /= norm;
            change += std::abs(y[i] - x[i]);
        }
        x.swap(y);
        if (change < tol) {
            r.per_node = x;
            r.converged = true;
            r.aggregate = std::accumulate(x.begin(), x.end(), 0.0) /
                          static_cast<double>(n);
            return r;
        }
    }
    r.per_node = x;
    return r; // non-convergence: aggregate stays 0, flag unset
}

DegreeHistogram degree_histogram(const NetGraph& g) {
    std::map<int, int> counts;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        ++counts[static_cast<int>(g.degree(i))];
    DegreeHistogram h;
    h.classes.assign(counts.begin(), counts.end());
    return h;
}

int connections_cost(const Genome& genome) {
    return static_cast<int>(genome.enabled_connection_count());
}

double degree_entropy(const NetGraph& g) {
    const auto hist = degree_histogram(g);
    double total = 0.0;
    for (const auto& [deg, count] : hist.classes) total += count;
    if (total <= 0.0) return 0.0;
    double h = 0.0;
    for (const auto& [deg, count] : hist.classes) {
        const double p = count / total;
        h -= p * std::log(p);
    }
    return h < 0.0 ? 0.0 : h; // -0.0 from a single class
}

MetricsReport compute_metrics(const Genome& genome, const MetricConfig& cfg) {
    MetricsReport report;
    const NetGraph g = build_graph(genome);
    report.node_count = static_cast<int>(g.node_count());
    report.connections_cost = connections_cost(genome);
    if (g.node_count() == 0) return report;
    report.global_efficiency = global_efficiency(g);
    report.local_efficiency = local_efficiency(g);
    report.degree_centrality = degree_centrality(g).aggregate;
    report.eigenvector_centrality =
        eigenvector_centrality(g, cfg.ec_tolerance, cfg.ec_max_iterations).aggregate;
    report.entropy = degree_entropy(g);
    return report;
}

} // namespace neatflow
