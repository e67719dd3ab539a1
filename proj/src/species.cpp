#include "neatflow/species.hpp"

#include <algorithm>
#include <cmath>

namespace neatflow {

double compatibility_distance(const Genome& a, const Genome& b,
                              const SpeciationConfig& cfg) {
    std::size_t ia = 0, ib = 0, matching = 0;
    double weight_diff = 0.0;
    while (ia < a.connections.size() && ib < b.connections.size()) {
        const auto& ca = a.connections[ia];
        const auto& cb = b.connections[ib];
        if (ca.innovation == cb.innovation) {
            ++matching;
            weight_diff += std::abs(ca.weight - cb.weight);
            ++ia;
            ++ib;
        } else if (ca.innovation < cb.innovation) {
            ++ia;
        } else {
            ++ib;
        }
    }
    const std::size_t larger = std::max(a.connections.size(), b.connections.size());
    const double mismatched =
        static_cast<double>(a.connections.size() + b.connections.size() - 2 * matching);
    const double normalizer = static_cast<double>(std::max<std::size_t>(1, larger));
    const double mean_dw = matching ? weight_diff / static_cast<double>(matching) : 0.0;
    return cfg.c_excess_disjoint * mismatched / normalizer + cfg.c_weight * mean_dw;
}

std::vector<Species> speciate(const std::vector<Genome>& population,
                              const SpeciationConfig& cfg,
                              const std::vector<Species>& previous) {
    std::vector<Species> result;
    result.reserve(previous.size());
    for (const auto& s : previous) result.push_back({s.representative, {}});

    for (std::size_t i = 0; i < population.size(); ++i) {
        bool placed = false;
        for (auto& s : result) {
            if (compatibility_distance(population[i], s.representative, cfg) <
                cfg.threshold) {
                s.members.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) result.push_back({population[i], {i}});
    }

    std::erase_if(result, [](const Species& s) { return s.members.empty(); });
    // representatives for the next generation: first member assigned here
    for (auto& s : result) s.representative = population[s.members.front()];
    return result;
}

} // namespace neatflow
