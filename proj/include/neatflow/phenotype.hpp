#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "neatflow/genome.hpp"

namespace neatflow {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Executable form of a genome: nodes laid out in topological order of the
// enabled-connection DAG (ties broken by node id ascending), incoming edges
// resolved to positions. Immutable after compile and safe to share across
// threads.
struct Phenotype {
    struct Incoming {
        int source_position;
        double weight;
    };
    struct Node {
        int id;
        double bias;
        bool is_input;
        std::vector<Incoming> incoming; // sources precede this node
    };

    std::vector<Node> nodes;            // evaluation order
    std::vector<int> input_positions;   // per input slot (ascending node id)
    std::vector<int> output_positions;  // per output slot (ascending node id)

    std::size_t input_arity() const { return input_positions.size(); }
    std::size_t output_arity() const { return output_positions.size(); }
};

// Deterministic; throws CyclicGenome if the enabled connections contain a
// cycle (unreachable for genomes produced by this library).
Phenotype compile(const Genome& g);

// Input nodes take the raw input values; every other node computes
// sigmoid(bias + sum(weight * source)), so an orphan node evaluates to
// sigmoid(bias). Returns one activation in (0,1) per output slot.
// Throws InputArity on length mismatch.
std::vector<double> activate(const Phenotype& p, std::span<const double> inputs);

} // namespace neatflow
