#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "neatflow/evaluate.hpp"
#include "neatflow/mutation.hpp"
#include "neatflow/reproduce.hpp"
#include "neatflow/selection.hpp"
#include "neatflow/species.hpp"

namespace neatflow {

struct ExperimentConfig {
    Task task = Task::iris;
    MeasureVariant variant;
    double pressure = 0.15;
    std::size_t population_size = 10;
    std::size_t generations = 1000;
    std::size_t runs = 20;
    std::uint64_t base_seed = 42;
    std::string data_path; // dataset file; unused for cart-pole
    int initial_hidden = 12;

    MutationConfig mutation;
    SpeciationConfig speciation;
    MetricConfig metrics;
    CartPoleParams cartpole;
    double survival_fraction = 0.2;
    std::size_t elite_count = 2;
    double tie_epsilon = 1e-9;
    double split_fraction = 0.75;
    bool split_stratified = true;
    int cartpole_train_episodes = 10;
    int cartpole_test_episodes = 20;

    // execution-only knob, not part of the experiment identity
    int threads = 1;

    void validate() const; // throws ConfigError
};

// Per-generation record of the current best-by-training-performance genome.
struct TraceRow {
    std::size_t generation;
    double best_train;
    double global_efficiency;
    double local_efficiency;
    double eigenvector_centrality;
    double entropy;
    int connections;
    int nodes;
};

struct RunResult {
    Genome best;
    double train_performance = 0.0;
    double test_performance = 0.0;
    int connections = 0;
    int nodes = 0;
    std::vector<TraceRow> trace;
};

struct SummaryRow {
    std::string measure;
    double pressure = 0.0;
    double mean_train = 0.0;
    double mean_test = 0.0;
    double mean_connections = 0.0;
    double mean_nodes = 0.0;
    std::size_t runs = 0;
};

struct BatchResult {
    ExperimentConfig config;
    std::vector<RunResult> runs;
    SummaryRow summary() const;
};

// Loads/derives the task data for a config (dataset split seeded from
// base_seed, cart-pole train/test seed sets).
EvalContext build_context(const ExperimentConfig& cfg);

// One evolution run: seeds an rng with base_seed + run_index, evolves
// population_size genomes for the configured number of generations and
// scores the best genome on the held-out data.
RunResult run_experiment(const ExperimentConfig& cfg, std::size_t run_index);
RunResult run_experiment(const ExperimentConfig& cfg, std::size_t run_index,
                         const EvalContext& ctx);

// Independent runs 0..runs-1 plus their mean summary row.
BatchResult run_batch(const ExperimentConfig& cfg);

// One batch per pressure value, identical seeds across values.
std::vector<BatchResult> pressure_sweep(const ExperimentConfig& cfg,
                                        const std::vector<double>& p_values);

} // namespace neatflow
