#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neatflow/cartpole.hpp"
#include "neatflow/dataset.hpp"
#include "neatflow/genome.hpp"
#include "neatflow/phenotype.hpp"

namespace neatflow {

enum class Task { cartpole, iris, wdbc };

std::string task_name(Task t);
std::optional<Task> parse_task(const std::string& name);

// (inputs, outputs) a genome must expose for the task.
std::pair<int, int> task_arity(Task t);

// Everything needed to score a genome. Built once per batch; immutable and
// shared by concurrent evaluations.
struct EvalContext {
    Task task = Task::iris;
    MetricConfig metric_config;

    // dataset tasks
    Dataset train;
    Dataset test;

    // cart-pole
    CartPoleParams cartpole;
    std::vector<std::uint64_t> train_seeds;
    std::vector<std::uint64_t> test_seeds;
};

EvalContext make_dataset_context(Task task, const Dataset& full,
                                 const SplitSpec& split_spec,
                                 const MetricConfig& metric_cfg = {});

EvalContext make_cartpole_context(const CartPoleParams& params,
                                  std::uint64_t base_seed, int train_episodes,
                                  int test_episodes,
                                  const MetricConfig& metric_cfg = {});

// Fraction of correctly classified samples. Multi-class: argmax over
// outputs, ties to the lowest class index. Binary: one output against a 0.5
// threshold. Throws ArityMismatch.
double classify_fitness(const Phenotype& net, const Dataset& data);

// Compiles the genome, scores it on the training data/seeds, computes the
// metric report and structure counts. Pure: never touches the genome.
EvalResult evaluate(const Genome& g, const EvalContext& ctx);

// Same performance statistic on the held-out split/seeds.
double test_performance(const Genome& g, const EvalContext& ctx);

// Fills missing eval caches, in index order; thread_count > 1 evaluates
// concurrently (results are independent of the thread count).
void evaluate_population(std::vector<Genome>& population, const EvalContext& ctx,
                         int thread_count = 1);

} // namespace neatflow
