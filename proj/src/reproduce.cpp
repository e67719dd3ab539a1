#include "neatflow/reproduce.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "neatflow/errors.hpp"

namespace neatflow {

namespace {

// true when `to` can already reach `from` through the accepted enabled edges
bool creates_cycle(const std::map<int, std::vector<int>>& out, int from, int to) {
    std::vector<int> stack{to};
    std::set<int> seen{to};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == from) return true;
        auto it = out.find(u);
        if (it == out.end()) continue;
        for (int v : it->second)
            if (seen.insert(v).second) stack.push_back(v);
    }
    return false;
}

} // namespace

Genome crossover(const Genome& a, const Genome& b, Rng& rng) {
    if (!a.eval || !b.eval)
        throw std::logic_error("crossover requires evaluated parents");
    const double pa = a.eval->performance;
    const double pb = b.eval->performance;
    const bool tie = pa == pb;
    const Genome& fitter = pb > pa ? b : a;

    // connection genes, merge-walk by innovation
    std::vector<ConnectionGene> genes;
    std::size_t ia = 0, ib = 0;
    while (ia < a.connections.size() || ib < b.connections.size()) {
        const bool a_left = ia < a.connections.size();
        const bool b_left = ib < b.connections.size();
        if (a_left && b_left &&
            a.connections[ia].innovation == b.connections[ib].innovation) {
            genes.push_back(rng.chance(0.5) ? a.connections[ia] : b.connections[ib]);
            ++ia;
            ++ib;
        } else {
            const bool from_a =
                a_left && (!b_left ||
                           a.connections[ia].innovation < b.connections[ib].innovation);
            const ConnectionGene& gene = from_a ? a.connections[ia] : b.connections[ib];
            const Genome& owner = from_a ? a : b;
            if (tie ? rng.chance(0.5) : (&owner == &fitter)) genes.push_back(gene);
            from_a ? ++ia : ++ib;
        }
    }

    // nodes: I/O plus everything referenced by inherited genes
    std::set<int> wanted;
    for (const auto& n : a.nodes)
        if (n.role != NodeRole::hidden) wanted.insert(n.id);
    for (const auto& g : genes) {
        wanted.insert(g.from);
        wanted.insert(g.to);
    }
    Genome child;
    for (int id : wanted) {
        const NodeGene* na = a.find_node(id);
        const NodeGene* nb = b.find_node(id);
        if (na && nb)
            child.nodes.push_back(rng.chance(0.5) ? *na : *nb);
        else
            child.nodes.push_back(na ? *na : *nb);
    }

    // re-validate: drop enabled genes that would duplicate a pair or close a
    // cycle, in innovation order
    std::set<std::pair<int, int>> pairs;
    std::map<int, std::vector<int>> out;
    for (auto& g : genes) {
        if (g.enabled) {
            if (!pairs.insert({g.from, g.to}).second) continue;
            if (creates_cycle(out, g.from, g.to)) continue;
            out[g.from].push_back(g.to);
        }
        child.connections.push_back(g);
    }
    return child;
}

std::vector<Genome> reproduce(const std::vector<Genome>& population,
                              const std::vector<Species>& species,
                              const std::vector<std::vector<std::size_t>>& species_orders,
                              const std::vector<std::size_t>& global_order,
                              const ReproductionConfig& cfg, Rng& rng,
                              InnovationRegistry& registry) {
    if (species.empty() || global_order.empty())
        throw EmptyPopulation("no species to reproduce from");
    assert(species.size() == species_orders.size());
    const std::size_t pop_size = cfg.population_size;

    // rank fitness: best-ranked genome gets pop_size, worst gets 1
    std::vector<double> rank_fitness(population.size(), 0.0);
    for (std::size_t pos = 0; pos < global_order.size(); ++pos)
        rank_fitness[global_order[pos]] = static_cast<double>(pop_size - pos);

    std::vector<double> weight(species.size(), 0.0);
    double total_weight = 0.0;
    for (std::size_t s = 0; s < species.size(); ++s) {
        double sum = 0.0;
        for (std::size_t idx : species[s].members) sum += rank_fitness[idx];
        weight[s] = sum / static_cast<double>(species[s].members.size());
        total_weight += weight[s];
    }

    // largest-remainder quotas summing to pop_size
    std::vector<std::size_t> quota(species.size(), 0);
    std::vector<std::pair<double, std::size_t>> remainder;
    std::size_t assigned = 0;
    for (std::size_t s = 0; s < species.size(); ++s) {
        const double share = static_cast<double>(pop_size) * weight[s] / total_weight;
        quota[s] = static_cast<std::size_t>(std::floor(share));
        assigned += quota[s];
        remainder.emplace_back(share - std::floor(share), s);
    }
    std::stable_sort(remainder.begin(), remainder.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });
    for (std::size_t k = 0; assigned < pop_size; ++k, ++assigned)
        ++quota[remainder[k % remainder.size()].second];

    // the species holding the top-ranked genome keeps at least one slot so
    // its elite carries the best genome forward
    std::size_t best_species = 0;
    for (std::size_t s = 0; s < species.size(); ++s)
        if (std::find(species[s].members.begin(), species[s].members.end(),
                      global_order.front()) != species[s].members.end())
            best_species = s;
    if (quota[best_species] == 0) {
        std::size_t donor = best_species;
        for (std::size_t s = 0; s < species.size(); ++s)
            if (quota[s] > quota[donor]) donor = s;
        --quota[donor];
        ++quota[best_species];
    }

    std::vector<Genome> next;
    next.reserve(pop_size);
    for (std::size_t s = 0; s < species.size(); ++s) {
        const auto& members = species[s].members;
        const auto& order = species_orders[s];
        assert(order.size() == members.size());
        std::size_t slots = quota[s];
        const std::size_t n_elite =
            std::min({static_cast<std::size_t>(cfg.elite_count), slots, members.size()});
        for (std::size_t e = 0; e < n_elite; ++e)
            next.push_back(population[members[order[e]]]);
        slots -= n_elite;

        const std::size_t eligible = std::max<std::size_t>(
            1, static_cast<std::size_t>(
                   std::ceil(cfg.survival_fraction * static_cast<double>(members.size()))));
        for (std::size_t k = 0; k < slots; ++k) {
            Genome child;
            if (eligible >= 2) {
                std::size_t i = rng.uniform_index(eligible);
                std::size_t j = rng.uniform_index(eligible - 1);
                if (j >= i) ++j;
                child = crossover(population[members[order[i]]],
                                  population[members[order[j]]], rng);
            } else {
                child = population[members[order[0]]];
            }
            next.push_back(mutate(child, cfg.mutation, rng, registry));
        }
    }
    assert(next.size() == pop_size);
    return next;
}

} // namespace neatflow
