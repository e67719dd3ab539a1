#include "neatflow/mutation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace neatflow {

namespace {

double clamp_to(double v, const MutationConfig& cfg) {
    return std::clamp(v, cfg.weight_min, cfg.weight_max);
}

void insert_node_sorted(Genome& g, NodeGene node) {
    auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), node.id,
                               [](const NodeGene& n, int v) { return n.id < v; });
    g.nodes.insert(it, node);
}

void insert_connection_sorted(Genome& g, ConnectionGene c) {
    auto it = std::lower_bound(
        g.connections.begin(), g.connections.end(), c.innovation,
        [](const ConnectionGene& x, int v) { return x.innovation < v; });
    g.connections.insert(it, c);
}

// Reachability over enabled connections, keyed by node id.
std::map<int, std::set<int>> enabled_reachability(const Genome& g) {
    std::map<int, std::vector<int>> out;
    for (const auto& c : g.connections)
        if (c.enabled) out[c.from].push_back(c.to);
    std::map<int, std::set<int>> reach;
    for (const auto& n : g.nodes) {
        auto& seen = reach[n.id];
        std::vector<int> stack{n.id};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            auto it = out.find(u);
            if (it == out.end()) continue;
            for (int v : it->second)
                if (seen.insert(v).second) stack.push_back(v);
        }
    }
    return reach;
}

void try_add_connection(Genome& g, const MutationConfig& cfg, Rng& rng,
                        InnovationRegistry& registry) {
    std::set<std::pair<int, int>> enabled_pairs;
    for (const auto& c : g.connections)
        if (c.enabled) enabled_pairs.insert({c.from, c.to});
    const auto reach = enabled_reachability(g);

    // ordered pairs that keep the genome feed-forward, in id order
    std::vector<std::pair<int, int>> candidates;
    for (const auto& from : g.nodes) {
        if (from.role == NodeRole::output) continue;
        for (const auto& to : g.nodes) {
            if (to.role == NodeRole::input || to.id == from.id) continue;
            if (enabled_pairs.count({from.id, to.id})) continue;
            if (reach.at(to.id).count(from.id)) continue; // would close a cycle
            candidates.emplace_back(from.id, to.id);
        }
    }
    if (candidates.empty()) return;
    auto [from, to] = candidates[rng.uniform_index(candidates.size())];
    const double weight = rng.uniform(-1.0, 1.0);
    for (auto& c : g.connections) {
        if (c.from == from && c.to == to) { // disabled gene: revive it
            c.enabled = true;
            c.weight = weight;
            return;
        }
    }
    insert_connection_sorted(
        g, {registry.connection_innovation(from, to), from, to, weight, true});
}

void try_delete_connection(Genome& g, Rng& rng) {
    std::vector<std::size_t> enabled;
    for (std::size_t i = 0; i < g.connections.size(); ++i)
        if (g.connections[i].enabled) enabled.push_back(i);
    if (enabled.empty()) return;
    g.connections.erase(g.connections.begin() +
                        enabled[rng.uniform_index(enabled.size())]);
}

void try_add_node(Genome& g, Rng& rng, InnovationRegistry& registry) {
    std::vector<std::size_t> enabled;
    for (std::size_t i = 0; i < g.connections.size(); ++i)
        if (g.connections[i].enabled) enabled.push_back(i);
    if (enabled.empty()) return;
    auto& split = g.connections[enabled[rng.uniform_index(enabled.size())]];
    const auto ids = registry.split_ids(split.innovation);
    const int from = split.from;
    const int to = split.to;
    const double weight = split.weight;
    split.enabled = false;
    insert_node_sorted(g, {ids.node_id, NodeRole::hidden, 0.0});
    insert_connection_sorted(g, {ids.incoming_innovation, from, ids.node_id, 1.0, true});
    insert_connection_sorted(g, {ids.outgoing_innovation, ids.node_id, to, weight, true});
}

void try_delete_node(Genome& g, Rng& rng) {
    std::vector<int> hidden;
    for (const auto& n : g.nodes)
        if (n.role == NodeRole::hidden) hidden.push_back(n.id);
    if (hidden.empty()) return;
    const int victim = hidden[rng.uniform_index(hidden.size())];
    std::erase_if(g.connections, [victim](const ConnectionGene& c) {
        return c.from == victim || c.to == victim;
    });
    std::erase_if(g.nodes, [victim](const NodeGene& n) { return n.id == victim; });
}

} // namespace

void perturb_parameters(Genome& g, const MutationConfig& cfg, Rng& rng) {
    for (auto& n : g.nodes) {
        if (n.role == NodeRole::input) continue; // input biases are never used
        if (rng.chance(cfg.p_bias)) {
            const double sign = rng.chance(0.5) ? 1.0 : -1.0;
            n.bias = clamp_to(n.bias + sign * cfg.step, cfg);
        }
    }
    for (auto& c : g.connections) {
        if (!c.enabled) continue;
        if (rng.chance(cfg.p_weight)) {
            const double sign = rng.chance(0.5) ? 1.0 : -1.0;
            c.weight = clamp_to(c.weight + sign * cfg.step, cfg);
        }
    }
}

Genome mutate(const Genome& g, const MutationConfig& cfg, Rng& rng,
              InnovationRegistry& registry) {
    Genome child = g;
    child.eval.reset();
    if (rng.chance(cfg.p_add_connection)) try_add_connection(child, cfg, rng, registry);
    if (rng.chance(cfg.p_delete_connection)) try_delete_connection(child, rng);
    if (rng.chance(cfg.p_add_node)) try_add_node(child, rng, registry);
    if (rng.chance(cfg.p_delete_node)) try_delete_node(child, rng);
    perturb_parameters(child, cfg, rng);
    return child;
}

} // namespace neatflow
