#include "neatflow/genome.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "neatflow/errors.hpp"

namespace neatflow {

namespace {

const char* role_name(NodeRole r) {
    switch (r) {
        case NodeRole::input: return "input";
        case NodeRole::hidden: return "hidden";
        case NodeRole::output: return "output";
    }
    return "hidden";
}

NodeRole role_from_name(const std::string& s) {
    if (s == "input") return NodeRole::input;
    if (s == "hidden") return NodeRole::hidden;
    if (s == "output") return NodeRole::output;
    throw InvalidGenome("unknown node role: " + s);
}

} // namespace

const NodeGene* Genome::find_node(int id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                               [](const NodeGene& n, int v) { return n.id < v; });
    return (it != nodes.end() && it->id == id) ? &*it : nullptr;
}

const ConnectionGene* Genome::find_connection(int innovation) const {
    auto it = std::lower_bound(
        connections.begin(), connections.end(), innovation,
        [](const ConnectionGene& c, int v) { return c.innovation < v; });
    return (it != connections.end() && it->innovation == innovation) ? &*it : nullptr;
}

bool Genome::has_enabled_connection(int from, int to) const {
    for (const auto& c : connections)
        if (c.enabled && c.from == from && c.to == to) return true;
    return false;
}

std::size_t Genome::enabled_connection_count() const {
    std::size_t n = 0;
    for (const auto& c : connections)
        if (c.enabled) ++n;
    return n;
}

std::vector<int> Genome::input_ids() const {
    std::vector<int> ids;
    for (const auto& n : nodes)
        if (n.role == NodeRole::input) ids.push_back(n.id);
    return ids;
}

std::vector<int> Genome::output_ids() const {
    std::vector<int> ids;
    for (const auto& n : nodes)
        if (n.role == NodeRole::output) ids.push_back(n.id);
    return ids;
}

std::size_t Genome::hidden_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes)
        if (node.role == NodeRole::hidden) ++n;
    return n;
}

Genome create_initial_genome(int n_inputs, int n_outputs, int hidden, Rng& rng) {
    Genome g;
    int id = 0;
    for (int i = 0; i < n_inputs; ++i)
        g.nodes.push_back({id++, NodeRole::input, 0.0});
    for (int i = 0; i < hidden; ++i)
        g.nodes.push_back({id++, NodeRole::hidden, 0.0});
    for (int i = 0; i < n_outputs; ++i)
        g.nodes.push_back({id++, NodeRole::output, 0.0});

    const int first_hidden = n_inputs;
    const int first_output = n_inputs + hidden;
    int innovation = 0;
    auto connect = [&](int from, int to) {
        g.connections.push_back({innovation++, from, to, rng.uniform(-1.0, 1.0), true});
    };
    if (hidden > 0) {
        for (int i = 0; i < n_inputs; ++i)
            for (int h = 0; h < hidden; ++h) connect(i, first_hidden + h);
        for (int h = 0; h < hidden; ++h)
            for (int o = 0; o < n_outputs; ++o) connect(first_hidden + h, first_output + o);
    } else {
        for (int i = 0; i < n_inputs; ++i)
            for (int o = 0; o < n_outputs; ++o) connect(i, first_output + o);
    }
    return g;
}

bool is_valid_genome(const Genome& g, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };

    std::map<int, NodeRole> role_of;
    int prev_id = -1;
    bool first = true;
    for (const auto& n : g.nodes) {
        if (!first && n.id <= prev_id) return fail("node ids not sorted/unique");
        first = false;
        prev_id = n.id;
        role_of[n.id] = n.role;
    }

    std::set<std::pair<int, int>> enabled_pairs;
    int prev_innov = -1;
    first = true;
    for (const auto& c : g.connections) {
        if (!first && c.innovation <= prev_innov)
            return fail("innovation ids not sorted/unique");
        first = false;
        prev_innov = c.innovation;
        auto from_it = role_of.find(c.from);
        auto to_it = role_of.find(c.to);
        if (from_it == role_of.end() || to_it == role_of.end())
            return fail("connection references a missing node");
        if (c.from == c.to) return fail("self connection");
        if (from_it->second == NodeRole::output)
            return fail("connection out of an output node");
        if (to_it->second == NodeRole::input)
            return fail("connection into an input node");
        if (c.enabled && !enabled_pairs.insert({c.from, c.to}).second)
            return fail("duplicate enabled connection");
    }

    // Kahn over enabled connections
    std::map<int, int> indegree;
    std::map<int, std::vector<int>> out;
    for (const auto& n : g.nodes) indegree[n.id] = 0;
    for (const auto& c : g.connections) {
        if (!c.enabled) continue;
        out[c.from].push_back(c.to);
        ++indegree[c.to];
    }
    std::vector<int> ready;
    for (const auto& [id, deg] : indegree)
        if (deg == 0) ready.push_back(id);
    std::size_t visited = 0;
    while (!ready.empty()) {
        int u = ready.back();
        ready.pop_back();
        ++visited;
        for (int v : out[u])
            if (--indegree[v] == 0) ready.push_back(v);
    }
    if (visited != g.nodes.size()) return fail("enabled connections contain a cycle");
    return true;
}

void validate_genome(const Genome& g) {
    std::string why;
    if (!is_valid_genome(g, &why)) throw InvalidGenome(why);
}

std::string genome_to_json(const Genome& g, int indent) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : g.nodes)
        j["nodes"].push_back({{"id", n.id}, {"role", role_name(n.role)}, {"bias", n.bias}});
    j["connections"] = nlohmann::json::array();
    for (const auto& c : g.connections)
        j["connections"].push_back({{"innovation", c.innovation},
                                    {"from", c.from},
                                    {"to", c.to},
                                    {"weight", c.weight},
                                    {"enabled", c.enabled}});
    return j.dump(indent);
}

Genome genome_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidGenome(std::string("genome json: ") + e.what());
    }
    Genome g;
    try {
        for (const auto& n : j.at("nodes"))
            g.nodes.push_back({n.at("id").get<int>(),
                               role_from_name(n.at("role").get<std::string>()),
                               n.at("bias").get<double>()});
        for (const auto& c : j.at("connections"))
            g.connections.push_back({c.at("innovation").get<int>(),
                                     c.at("from").get<int>(), c.at("to").get<int>(),
                                     c.at("weight").get<double>(),
                                     c.at("enabled").get<bool>()});
    } catch (const nlohmann::json::exception& e) {
        throw InvalidGenome(std::string("genome json: ") + e.what());
    }
    validate_genome(g);
    return g;
}

} // namespace neatflow
