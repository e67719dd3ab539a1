#pragma once

#include "neatflow/genome.hpp"
#include "neatflow/innovation.hpp"
#include "neatflow/rng.hpp"

namespace neatflow {

struct MutationConfig {
    double p_add_connection = 0.2;
    double p_delete_connection = 0.2;
    double p_add_node = 0.2;
    double p_delete_node = 0.2;
    double p_weight = 0.7; // per enabled connection
    double p_bias = 0.7;   // per hidden/output node
    double step = 0.5;
    double weight_min = -30.0;
    double weight_max = 30.0;
};

// Applies the six mutation kinds independently with their configured
// probabilities, in a fixed order: add connection, delete connection, add
// node (split), delete node, bias steps, weight steps. A component that
// cannot apply (no candidate pair, nothing deletable) is a no-op. The
// result carries no eval cache.
Genome mutate(const Genome& g, const MutationConfig& cfg, Rng& rng,
              InnovationRegistry& registry);

// Only the bias/weight stepping, in place: the jitter used to diversify
// copies of the initial template.
void perturb_parameters(Genome& g, const MutationConfig& cfg, Rng& rng);

} // namespace neatflow
