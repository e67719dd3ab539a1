#pragma once

#include <cstddef>
#include <vector>

#include "neatflow/genome.hpp"

namespace neatflow {

struct SpeciationConfig {
    double c_excess_disjoint = 1.0;
    double c_weight = 0.5;
    double threshold = 3.0;
};

struct Species {
    Genome representative;
    std::vector<std::size_t> members; // population indices, insertion order
};

// c1*(excess+disjoint)/max(1, larger gene count) + c3*mean |dw| over
// matching genes. Symmetric, zero on identical genomes.
double compatibility_distance(const Genome& a, const Genome& b,
                              const SpeciationConfig& cfg);

// Each genome joins the first species (previous-generation species first,
// then species founded during this call) whose representative is within
// threshold, else founds a new one. Returned species carry their first
// member as the next generation's representative; empty previous species
// are dropped. The result is a partition of the population.
std::vector<Species> speciate(const std::vector<Genome>& population,
                              const SpeciationConfig& cfg,
                              const std::vector<Species>& previous);

} // namespace neatflow
