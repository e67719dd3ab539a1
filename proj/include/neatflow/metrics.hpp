#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace neatflow {

struct Genome;

// Undirected simple graph: the metric-facing view of a genome. Nodes are
// addressed by dense index; node_ids keeps the original identifiers.
// neighbors[i] is sorted, the relation is symmetric and irreflexive.
struct NetGraph {
    std::vector<int> node_ids;
    std::vector<std::vector<int>> neighbors;

    std::size_t node_count() const { return node_ids.size(); }
    std::size_t edge_count() const;
    std::size_t degree(std::size_t i) const { return neighbors[i].size(); }
    bool has_edge(std::size_t i, std::size_t j) const;
};

// Builds a graph from explicit undirected index pairs; duplicates and
// self-loops are dropped.
NetGraph graph_from_edges(std::size_t node_count,
                          const std::vector<std::pair<int, int>>& edges);

inline constexpr int kUnreachable = -1;

// Hop-count distances for every ordered pair; kUnreachable when disconnected.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<int> dist; // row-major n*n

    int at(std::size_t i, std::size_t j) const { return dist[i * n + j]; }
};

// classes: (degree, number of nodes with that degree), ascending by degree.
struct DegreeHistogram {
    std::vector<std::pair<int, int>> classes;
};

struct DegreeCentralityResult {
    std::vector<double> per_node;
    double aggregate = 0.0;
};

struct EigenvectorCentralityResult {
    std::vector<double> per_node;
    double aggregate = 0.0;
    bool converged = false;
};

struct MetricConfig {
    double ec_tolerance = 1e-6;
    int ec_max_iterations = 1000;
};

struct MetricsReport {
    double global_efficiency = 0.0;
    double local_efficiency = 0.0;
    double degree_centrality = 0.0;
    double eigenvector_centrality = 0.0;
    double entropy = 0.0; // nats
    int connections_cost = 0;
    int node_count = 0;
};

// One graph node per genome node; one undirected edge per enabled
// connection, parallel/antiparallel connections collapsed.
NetGraph build_graph(const Genome& genome);

// BFS from every node (unweighted hop counts).
DistanceMatrix shortest_paths(const NetGraph& g);

// Mean inverse shortest-path length over ordered pairs; unreachable pairs
// contribute 0; graphs with fewer than two nodes score 0.
double global_efficiency(const NetGraph& g);

// Mean over nodes of the global efficiency of the subgraph induced on each
// node's neighbors; nodes with fewer than two neighbors contribute 0.
double local_efficiency(const NetGraph& g);

// per_node = degree/(N-1) (0 when N < 2); aggregate = mean over nodes.
DegreeCentralityResult degree_centrality(const NetGraph& g);

// Power iteration for the dominant adjacency eigenvector, iterating with
// A + I so the Perron component dominates on bipartite graphs too. Start
// vector uniform positive, L2-normalized each step, converged when the L1
// change drops below tol. Edgeless graphs and non-convergence yield
// aggregate 0 with converged=false. Throws EmptyGraph when there are no
// nodes.
EigenvectorCentralityResult eigenvector_centrality(const NetGraph& g,
                                                   double tol = 1e-6,
                                                   int max_iter = 1000);

DegreeHistogram degree_histogram(const NetGraph& g);

// Number of enabled connections in the genome (2*edges of the simple-graph
// view when no parallel connections exist, i.e. monotone in sum(n_i * x_i)).
int connections_cost(const Genome& genome);

// Shannon entropy (nats) of the degree-class distribution, p_i = n_i / N.
double degree_entropy(const NetGraph& g);

// One-call facade: every report field populated, deterministically.
MetricsReport compute_metrics(const Genome& genome, const MetricConfig& cfg = {});

} // namespace neatflow
