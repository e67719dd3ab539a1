#include "neatflow/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "neatflow/errors.hpp"

namespace neatflow {

void ExperimentConfig::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ConfigError(what);
    };
    require(population_size >= 2, "population size must be at least 2");
    require(generations >= 1, "generations must be at least 1");
    require(runs >= 1, "runs must be at least 1");
    require(pressure >= 0.0 && pressure <= 1.0, "pressure must be in [0,1]");
    require(tie_epsilon > 0.0, "tie epsilon must be positive");
    require(initial_hidden >= 0, "initial hidden count must be non-negative");
    for (double p : {mutation.p_add_connection, mutation.p_delete_connection,
                     mutation.p_add_node, mutation.p_delete_node, mutation.p_weight,
                     mutation.p_bias})
        require(p >= 0.0 && p <= 1.0, "mutation probabilities must be in [0,1]");
    require(mutation.step > 0.0, "mutation step must be positive");
    require(mutation.weight_min < mutation.weight_max, "weight bounds inverted");
    require(speciation.c_excess_disjoint >= 0.0 && speciation.c_weight >= 0.0,
            "speciation coefficients must be non-negative");
    require(speciation.threshold > 0.0, "speciation threshold must be positive");
    require(survival_fraction > 0.0 && survival_fraction <= 1.0,
            "survival fraction must be in (0,1]");
    require(split_fraction > 0.0 && split_fraction < 1.0,
            "split fraction must be in (0,1)");
    require(metrics.ec_tolerance > 0.0, "ec tolerance must be positive");
    require(metrics.ec_max_iterations >= 1, "ec max iterations must be at least 1");
    require(cartpole_train_episodes >= 1 && cartpole_test_episodes >= 1,
            "cart-pole episode counts must be at least 1");
    require(threads >= 1, "thread count must be at least 1");
    require(cartpole.dt > 0.0, "dt must be positive");
    const double steps = cartpole.episode_seconds / cartpole.dt;
    require(std::abs(steps - std::llround(steps)) < 1e-9,
            "dt must divide the episode length into whole steps");
}

SummaryRow BatchResult::summary() const {
    SummaryRow row;
    row.measure = config.variant.name();
    row.pressure = config.pressure;
    row.runs = runs.size();
    for (const auto& r : runs) {
        row.mean_train += r.train_performance;
        row.mean_test += r.test_performance;
        row.mean_connections += r.connections;
        row.mean_nodes += r.nodes;
    }
    const double n = static_cast<double>(runs.size());
    if (!runs.empty()) {
        row.mean_train /= n;
        row.mean_test /= n;
        row.mean_connections /= n;
        row.mean_nodes /= n;
    }
    return row;
}

EvalContext build_context(const ExperimentConfig& cfg) {
    if (cfg.task == Task::cartpole)
        return make_cartpole_context(cfg.cartpole, cfg.base_seed,
                                     cfg.cartpole_train_episodes,
                                     cfg.cartpole_test_episodes, cfg.metrics);
    const Dataset full =
        cfg.task == Task::iris ? load_iris(cfg.data_path) : load_wdbc(cfg.data_path);
    const SplitSpec spec{cfg.split_fraction, cfg.base_seed, cfg.split_stratified};
    return make_dataset_context(cfg.task, full, spec, cfg.metrics);
}

RunResult run_experiment(const ExperimentConfig& cfg, std::size_t run_index) {
    return run_experiment(cfg, run_index, build_context(cfg));
}

RunResult run_experiment(const ExperimentConfig& cfg, std::size_t run_index,
                         const EvalContext& ctx) {
    cfg.validate();
    Rng rng(mix_seed(cfg.base_seed + run_index));
    const auto [n_in, n_out] = task_arity(cfg.task);

    Genome seed_genome = create_initial_genome(n_in, n_out, cfg.initial_hidden, rng);
    InnovationRegistry registry = InnovationRegistry::for_genome(seed_genome);

    // structure-identical, parameter-jittered copies of the template
    std::vector<Genome> population;
    population.reserve(cfg.population_size);
    for (std::size_t i = 0; i < cfg.population_size; ++i) {
        Genome g = seed_genome;
        perturb_parameters(g, cfg.mutation, rng);
        population.push_back(std::move(g));
    }

    const SelectionConfig selection{cfg.pressure, cfg.tie_epsilon};
    ReproductionConfig reproduction{cfg.population_size, cfg.survival_fraction,
                                    cfg.elite_count, cfg.mutation};
    std::vector<Species> species_list;

    RunResult result;
    double best_perf = -1.0;

    for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
        evaluate_population(population, ctx, cfg.threads);

        std::size_t gen_best = 0;
        for (std::size_t i = 1; i < population.size(); ++i)
            if (population[i].eval->performance >
                population[gen_best].eval->performance)
                gen_best = i;
        const EvalResult& be = *population[gen_best].eval;
        result.trace.push_back({gen, be.performance, be.metrics.global_efficiency,
                                be.metrics.local_efficiency,
                                be.metrics.eigenvector_centrality, be.metrics.entropy,
                                be.metrics.connections_cost, be.node_count});
        if (be.performance > best_perf) {
            best_perf = be.performance;
            result.best = population[gen_best];
        }

        if (gen + 1 == cfg.generations) break;

        registry.begin_generation();
        species_list = speciate(population, cfg.speciation, species_list);

        std::vector<ObjectiveVector> objectives;
        objectives.reserve(population.size());
        for (const auto& g : population)
            objectives.push_back(objective_vector(*g.eval, cfg.variant));

        const auto global_order = rank_population(objectives, selection, rng);
        std::vector<std::vector<std::size_t>> species_orders;
        species_orders.reserve(species_list.size());
        for (const auto& s : species_list) {
            std::vector<ObjectiveVector> member_objs;
            member_objs.reserve(s.members.size());
            for (std::size_t idx : s.members) member_objs.push_back(objectives[idx]);
            species_orders.push_back(rank_population(member_objs, selection, rng));
        }
        population = reproduce(population, species_list, species_orders, global_order,
                               reproduction, rng, registry);
    }

    result.train_performance = best_perf;
    result.test_performance = test_performance(result.best, ctx);
    result.connections = static_cast<int>(result.best.enabled_connection_count());
    result.nodes = static_cast<int>(result.best.nodes.size());
    return result;
}

BatchResult run_batch(const ExperimentConfig& cfg) {
    cfg.validate();
    BatchResult batch;
    batch.config = cfg;
    const EvalContext ctx = build_context(cfg);
    batch.runs.reserve(cfg.runs);
    for (std::size_t k = 0; k < cfg.runs; ++k)
        batch.runs.push_back(run_experiment(cfg, k, ctx));
    return batch;
}

std::vector<BatchResult> pressure_sweep(const ExperimentConfig& cfg,
                                        const std::vector<double>& p_values) {
    if (p_values.empty()) throw ConfigError("pressure sweep needs at least one value");
    std::vector<BatchResult> batches;
    batches.reserve(p_values.size());
    for (double p : p_values) {
        ExperimentConfig c = cfg;
        c.pressure = p;
        batches.push_back(run_batch(c));
    }
    return batches;
}

} // namespace neatflow
