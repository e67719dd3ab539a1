#pragma once

#include <cstddef>
#include <vector>

#include "neatflow/mutation.hpp"
#include "neatflow/species.hpp"

namespace neatflow {

struct ReproductionConfig {
    std::size_t population_size = 0;
    double survival_fraction = 0.2;
    std::size_t elite_count = 2;
    MutationConfig mutation;
};

// Matching genes (same innovation) inherit from a random parent; disjoint
// and excess genes come from the fitter parent (performance ties: each such
// gene kept with probability 1/2). The child is re-validated: enabled genes
// that would duplicate an enabled (from,to) pair or close a cycle are
// dropped, in innovation order. Both parents must carry an eval cache.
Genome crossover(const Genome& a, const Genome& b, Rng& rng);

// Builds the next generation at fixed population size.
//   species_orders[s]: positions into species[s].members, best first.
//   global_order: population indices best first; genome at position k gets
//   rank-fitness pop_size-k and each species' offspring quota is
//   proportional to its members' mean rank-fitness (largest-remainder
//   rounding). The species holding the top-ranked genome always keeps at
//   least one slot so elitism can preserve the best genome.
// Per species: the best min(elite_count, quota, size) members are copied
// unchanged; remaining slots are crossover of two distinct parents drawn
// from the top max(1, ceil(survival_fraction*size)) members (asexual copy
// when only one is eligible) followed by mutation.
std::vector<Genome> reproduce(const std::vector<Genome>& population,
                              const std::vector<Species>& species,
                              const std::vector<std::vector<std::size_t>>& species_orders,
                              const std::vector<std::size_t>& global_order,
                              const ReproductionConfig& cfg, Rng& rng,
                              InnovationRegistry& registry);

} // namespace neatflow
