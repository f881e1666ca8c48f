#pragma once

#include <random>

#include "clustered/layered.hpp"
#include "oracles.hpp"

namespace fixture {

using namespace clustered;

// Singleton parts over g itself, witnessed by a heuristic decomposition.
inline KLPartition singleton_partition(const Graph& g, const Layering& l)
{
    KLPartition klp;
    klp.hp.host = g;
    for (std::size_t v = 0; v < g.n(); ++v)
        klp.hp.parts.push_back({static_cast<Vertex>(v)});
    klp.layering = l;
    klp.witness = heuristic_tree_decomposition(g);
    klp.k = static_cast<std::size_t>(std::max(0, width(klp.witness)));
    klp.l = g.n() > 0 ? 1 : 0;
    return klp;
}

// Random grouping of the vertices into `groups` non-empty parts; the host is
// the quotient, k and l are the measured values.
inline KLPartition random_partition(const Graph& g, const Layering& l, std::size_t groups, std::mt19937_64& rng)
{
    groups = std::max<std::size_t>(1, std::min(groups, g.n()));
    std::vector<Vertex> order(g.n());
    for (std::size_t v = 0; v < g.n(); ++v)
        order[v] = static_cast<Vertex>(v);
    std::shuffle(order.begin(), order.end(), rng);
    KLPartition klp;
    klp.hp.parts.resize(groups);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto slot = i < groups ? i : static_cast<std::size_t>(rng() % groups);
        klp.hp.parts[slot].push_back(order[i]);
    }
    for (auto& p : klp.hp.parts)
        normalize(p);
    klp.hp.host = quotient(g, klp.hp.parts);
    klp.layering = l;
    klp.witness = heuristic_tree_decomposition(klp.hp.host);
    klp.k = static_cast<std::size_t>(std::max(0, width(klp.witness)));
    klp.l = partition_layered_width(g, klp.hp, l);
    return klp;
}

} // namespace fixture
