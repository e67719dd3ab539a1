#include "neatflow/innovation.hpp"

#include <algorithm>

#include "neatflow/genome.hpp"

namespace neatflow {

InnovationRegistry InnovationRegistry::for_genome(const Genome& g) {
    int max_node = -1;
    for (const auto& n : g.nodes) max_node = std::max(max_node, n.id);
    int max_innov = -1;
    for (const auto& c : g.connections) max_innov = std::max(max_innov, c.innovation);
    return InnovationRegistry(max_node + 1, max_innov + 1);
}

int InnovationRegistry::connection_innovation(int from, int to) {
    auto [it, inserted] = connection_signatures_.try_emplace({from, to}, next_innovation_);
    if (inserted) ++next_innovation_;
    return it->second;
}

InnovationRegistry::SplitIds InnovationRegistry::split_ids(int connection_innovation) {
    auto it = split_signatures_.find(connection_innovation);
    if (it == split_signatures_.end()) {
        SplitIds ids{next_node_id_++, next_innovation_, next_innovation_ + 1};
        next_innovation_ += 2;
        it = split_signatures_.emplace(connection_innovation, ids).first;
    }
    return it->second;
}

} // namespace neatflow
