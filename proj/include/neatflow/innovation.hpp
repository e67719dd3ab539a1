#pragma once

#include <map>
#include <utility>

namespace neatflow {

struct Genome;

// Hands out innovation numbers and node ids. Two identical structural
// mutations within one generation receive the same ids (so crossover can
// align them); begin_generation() clears the signature maps while the
// counters keep growing, which keeps every id globally unique.
//
// The registry is the one mutable resource shared across a generation; the
// harness performs all structural mutation on a single control thread in
// population order.
class InnovationRegistry {
public:
    InnovationRegistry(int next_node_id, int next_innovation)
        : next_node_id_(next_node_id), next_innovation_(next_innovation) {}

    // Counters start just past the ids used by the given genome.
    static InnovationRegistry for_genome(const Genome& g);

    void begin_generation() {
        connection_signatures_.clear();
        split_signatures_.clear();
    }

    int connection_innovation(int from, int to);

    struct SplitIds {
        int node_id;
        int incoming_innovation;
        int outgoing_innovation;
    };

    // Ids for splitting the connection with the given innovation number.
    SplitIds split_ids(int connection_innovation);

    int peek_next_node_id() const { return next_node_id_; }
    int peek_next_innovation() const { return next_innovation_; }

private:
    int next_node_id_;
    int next_innovation_;
    std::map<std::pair<int, int>, int> connection_signatures_;
    std::map<int, SplitIds> split_signatures_;
};

} // namespace neatflow
