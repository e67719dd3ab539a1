#include "neatflow/phenotype.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

#include "neatflow/errors.hpp"

namespace neatflow {

Phenotype compile(const Genome& g) {
    std::map<int, std::vector<std::pair<int, double>>> incoming_of; // to -> (from, w)
    std::map<int, std::vector<int>> out;
    std::map<int, int> indegree;
    for (const auto& n : g.nodes) indegree[n.id] = 0;
    for (const auto& c : g.connections) {
        if (!c.enabled) continue;
        incoming_of[c.to].emplace_back(c.from, c.weight);
        out[c.from].push_back(c.to);
        ++indegree[c.to];
    }

    // Kahn's algorithm, min node id first
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (const auto& [id, deg] : indegree)
        if (deg == 0) ready.push(id);

    Phenotype p;
    std::map<int, int> position;
    while (!ready.empty()) {
        const int id = ready.top();
        ready.pop();
        const NodeGene* node = g.find_node(id);
        position[id] = static_cast<int>(p.nodes.size());
        Phenotype::Node pn{id, node->bias, node->role == NodeRole::input, {}};
        auto inc = incoming_of.find(id);
        if (inc != incoming_of.end()) {
            std::sort(inc->second.begin(), inc->second.end()); // by source id
            for (auto [from, w] : inc->second)
                pn.incoming.push_back({position.at(from), w});
        }
        p.nodes.push_back(std::move(pn));
        auto it = out.find(id);
        if (it == out.end()) continue;
        for (int v : it->second)
            if (--indegree[v] == 0) ready.push(v);
    }
    if (p.nodes.size() != g.nodes.size())
        throw CyclicGenome("enabled connections contain a cycle");

    for (int id : g.input_ids()) p.input_positions.push_back(position.at(id));
    for (int id : g.output_ids()) p.output_positions.push_back(position.at(id));
    return p;
}

std::vector<double> activate(const Phenotype& p, std::span<const double> inputs) {
    if (inputs.size() != p.input_arity())
        throw InputArity("expected " + std::to_string(p.input_arity()) +
                         " inputs, got " + std::to_string(inputs.size()));
    std::vector<double> value(p.nodes.size(), 0.0);
    for (std::size_t slot = 0; slot < inputs.size(); ++slot)
        value[p.input_positions[slot]] = inputs[slot];
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const auto& node = p.nodes[i];
        if (node.is_input) continue;
        double acc = node.bias;
        for (const auto& in : node.incoming)
            acc += in.weight * value[in.source_position];
        value[i] = sigmoid(acc);
    }
    std::vector<double> outputs;
    outputs.reserve(p.output_arity());
    for (int pos : p.output_positions) outputs.push_back(value[pos]);
    return outputs;
}

} // namespace neatflow
