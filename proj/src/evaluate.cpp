#include "neatflow/evaluate.hpp"

#include <algorithm>
#include <thread>

#include "neatflow/errors.hpp"
#include "neatflow/metrics.hpp"

namespace neatflow {

std::string task_name(Task t) {
    switch (t) {
        case Task::cartpole: return "cartpole";
        case Task::iris: return "iris";
        case Task::wdbc: return "wdbc";
    }
    return "iris";
}

std::optional<Task> parse_task(const std::string& name) {
    if (name == "cartpole") return Task::cartpole;
    if (name == "iris") return Task::iris;
    if (name == "wdbc") return Task::wdbc;
    return std::nullopt;
}

std::pair<int, int> task_arity(Task t) {
    switch (t) {
        case Task::cartpole: return {4, 1};
        case Task::iris: return {4, 3};
        case Task::wdbc: return {9, 1};
    }
    return {4, 3};
}

EvalContext make_dataset_context(Task task, const Dataset& full,
                                 const SplitSpec& split_spec,
                                 const MetricConfig& metric_cfg) {
    EvalContext ctx;
    ctx.task = task;
    ctx.metric_config = metric_cfg;
    auto [train, test] = split(full, split_spec);
    ctx.train = std::move(train);
    ctx.test = std::move(test);
    const auto [n_in, n_out] = task_arity(task);
    if (ctx.train.feature_count() != static_cast<std::size_t>(n_in))
        throw ArityMismatch(task_name(task) + " expects " + std::to_string(n_in) +
                            " features");
    return ctx;
}

EvalContext make_cartpole_context(const CartPoleParams& params,
                                  std::uint64_t base_seed, int train_episodes,
                                  int test_episodes, const MetricConfig& metric_cfg) {
    EvalContext ctx;
    ctx.task = Task::cartpole;
    ctx.metric_config = metric_cfg;
    ctx.cartpole = params;
    for (int k = 0; k < train_episodes; ++k)
        ctx.train_seeds.push_back(derive_seed(base_seed, 1, k));
    for (int k = 0; k < test_episodes; ++k)
        ctx.test_seeds.push_back(derive_seed(base_seed, 2, k));
    return ctx;
}

double classify_fitness(const Phenotype& net, const Dataset& data) {
    if (net.input_arity() != data.feature_count())
        throw ArityMismatch("network input arity " + std::to_string(net.input_arity()) +
                            " != feature count " + std::to_string(data.feature_count()));
    const bool binary = data.n_classes == 2 && net.output_arity() == 1;
    if (!binary && net.output_arity() != static_cast<std::size_t>(data.n_classes))
        throw ArityMismatch("network output arity " +
                            std::to_string(net.output_arity()) + " != class count " +
                            std::to_string(data.n_classes));
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto out = activate(net, data.features[i]);
        int predicted = 0;
        if (binary) {
            predicted = out[0] >= 0.5 ? 1 : 0;
        } else {
            for (std::size_t k = 1; k < out.size(); ++k)
                if (out[k] > out[predicted]) predicted = static_cast<int>(k);
        }
        if (predicted == data.labels[i]) ++correct;
    }
    return data.size() == 0
               ? 0.0
               : static_cast<double>(correct) / static_cast<double>(data.size());
}

namespace {

double performance_on(const Genome& g, const EvalContext& ctx, bool held_out) {
    const Phenotype net = compile(g);
    if (ctx.task == Task::cartpole)
        return cartpole_fitness(net, ctx.cartpole,
                                held_out ? ctx.test_seeds : ctx.train_seeds);
    return classify_fitness(net, held_out ? ctx.test : ctx.train);
}

} // namespace

EvalResult evaluate(const Genome& g, const EvalContext& ctx) {
    EvalResult r;
    r.performance = performance_on(g, ctx, false);
    r.metrics = compute_metrics(g, ctx.metric_config);
    r.node_count = static_cast<int>(g.nodes.size());
    r.connection_count = static_cast<int>(g.enabled_connection_count());
    return r;
}

double test_performance(const Genome& g, const EvalContext& ctx) {
    return performance_on(g, ctx, true);
}

void evaluate_population(std::vector<Genome>& population, const EvalContext& ctx,
                         int thread_count) {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < population.size(); ++i)
        if (!population[i].eval) pending.push_back(i);
    if (pending.empty()) return;

    if (thread_count <= 1 || pending.size() == 1) {
        for (std::size_t i : pending) population[i].eval = evaluate(population[i], ctx);
        return;
    }
    const std::size_t workers =
        std::min<std::size_t>(thread_count, pending.size());
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t k = w; k < pending.size(); k += workers) {
                const std::size_t i = pending[k];
                population[i].eval = evaluate(population[i], ctx);
            }
        });
    }
    for (auto& t : threads) t.join();
}

} // namespace neatflow
