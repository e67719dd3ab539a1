#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "neatflow/metrics.hpp"
#include "neatflow/rng.hpp"

namespace neatflow {

enum class NodeRole { input, hidden, output };

struct NodeGene {
    int id;
    NodeRole role;
    double bias;
};

struct ConnectionGene {
    int innovation;
    int from;
    int to;
    double weight;
    bool enabled;
};

struct EvalResult {
    double performance = 0.0;
    MetricsReport metrics;
    int node_count = 0;
    int connection_count = 0; // enabled connections
};

// Evolvable network description. Invariants maintained by every operation:
//   - nodes sorted by id, ids unique; connections sorted by innovation,
//     innovations unique
//   - no connection into an input, none out of an output
//   - no duplicate (from,to) among enabled connections
//   - enabled connections form a DAG (feed-forward)
// Disabled genes are retained for crossover alignment but excluded from the
// phenotype and the metric graph.
struct Genome {
    std::vector<NodeGene> nodes;
    std::vector<ConnectionGene> connections;
    std::optional<EvalResult> eval;

    const NodeGene* find_node(int id) const;
    const ConnectionGene* find_connection(int innovation) const;
    bool has_enabled_connection(int from, int to) const;
    std::size_t enabled_connection_count() const;
    std::vector<int> input_ids() const;  // ascending
    std::vector<int> output_ids() const; // ascending
    std::size_t hidden_count() const;
};

// Fully layered template: every input wired to every hidden node and every
// hidden node to every output; inputs wired straight to outputs when
// hidden == 0. Weights uniform in [-1, 1], biases 0, innovations 0..E-1.
Genome create_initial_genome(int n_inputs, int n_outputs, int hidden, Rng& rng);

bool is_valid_genome(const Genome& g, std::string* why = nullptr);
void validate_genome(const Genome& g); // throws InvalidGenome

std::string genome_to_json(const Genome& g, int indent = -1);
Genome genome_from_json(const std::string& text);

} // namespace neatflow
