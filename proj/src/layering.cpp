#include "clustered/layering.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "clustered/error.hpp"

namespace clustered {

std::vector<int> Layering::index_of(std::size_t n) const
{
    std::vector<int> idx(n, -1);
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (Vertex v : layers[i])
            if (v >= 0 && static_cast<std::size_t>(v) < n)
                idx[static_cast<std::size_t>(v)] = static_cast<int>(i);
    return idx;
}

std::string ValidationReport::summary(std::size_t max_items) const
{
    if (ok())
        return "ok";
    std::ostringstream os;
    os << violations.size() << " violation(s)";
    for (std::size_t i = 0; i < violations.size() && i < max_items; ++i)
        os << "; " << violations[i].message;
    if (violations.size() > max_items)
        os << "; ...";
    return os.str();
}

ValidationReport validate_layering(const Graph& g, const Layering& l)
{
    ValidationReport rep;
    std::vector<int> idx(g.n(), -1);
    for (std::size_t i = 0; i < l.layers.size(); ++i) {
        for (Vertex v : l.layers[i]) {
            if (!g.valid_vertex(v)) {
                rep.violations.push_back({Violation::Kind::InvalidId, v, -1,
                                          "layer " + std::to_string(i) + " holds invalid id " + std::to_string(v)});
                continue;
            }
            auto& slot = idx[static_cast<std::size_t>(v)];
            if (slot >= 0) {
                rep.violations.push_back({Violation::Kind::Duplicate, v, -1,
                                          "vertex " + std::to_string(v) + " in layers " + std::to_string(slot) +
                                              " and " + std::to_string(i)});
                continue;
            }
            slot = static_cast<int>(i);
        }
    }
    for (std::size_t v = 0; v < g.n(); ++v)
        if (idx[v] < 0)
            rep.violations.push_back({Violation::Kind::Missing, static_cast<Vertex>(v), -1,
                                      "vertex " + std::to_string(v) + " is in no layer"});
    for (auto [u, v] : g.edges()) {
        int a = idx[static_cast<std::size_t>(u)], b = idx[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0 && std::abs(a - b) > 1)
            rep.violations.push_back({Violation::Kind::Edge, u, v,
                                      "edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins layers " +
                                          std::to_string(a) + " and " + std::to_string(b)});
    }
    return rep;
}

Layering bfs_layering(const Graph& g, Vertex root)
{
    if (!g.valid_vertex(root))
        throw InvalidInput("bfs_layering: root " + std::to_string(root) + " is not a vertex");
    auto dist = bfs_distances(g, root);
    Layering l;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (dist[v] < 0)
            throw InvalidInput("bfs_layering: graph is disconnected (vertex " + std::to_string(v) +
                               " unreachable); use bfs_layering_multi");
        auto d = static_cast<std::size_t>(dist[v]);
        if (l.layers.size() <= d)
            l.layers.resize(d + 1);
        l.layers[d].push_back(static_cast<Vertex>(v));
    }
    return l;
}

Layering bfs_layering_multi(const Graph& g)
{
    Layering l;
    std::vector<int> dist(g.n(), -1);
    for (const auto& comp : connected_components(g)) {
        auto d = bfs_distances(g, comp.front());
        for (Vertex v : comp)
            dist[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(v)];
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        auto d = static_cast<std::size_t>(dist[v]);
        if (l.layers.size() <= d)
            l.layers.resize(d + 1);
        l.layers[d].push_back(static_cast<Vertex>(v));
    }
    return l;
}

Layering shift_layering(const Layering& l, std::size_t s)
{
    Layering out;
    out.layers.resize(s);
    out.layers.insert(out.layers.end(), l.layers.begin(), l.layers.end());
    return out;
}

VertexSet band(const Layering& l, std::size_t first, std::size_t width)
{
    VertexSet out;
    for (std::size_t i = first; i < first + width && i < l.layers.size(); ++i)
        out.insert(out.end(), l.layers[i].begin(), l.layers[i].end());
    normalize(out);
    return out;
}

Layering coarsen_layering(const Layering& l, std::size_t p)
{
    if (p == 0)
        throw InvalidInput("coarsen_layering: p must be at least 1");
    Layering out;
    out.layers.resize((l.layers.size() + p - 1) / p);
    for (std::size_t i = 0; i < out.layers.size(); ++i)
        out.layers[i] = band(l, i * p, p);
    return out;
}

CollapsedLayering distance_collapse(const Layering& l, const std::vector<std::size_t>& hit_layers)
{
    if (hit_layers.empty())
        throw InvalidInput("distance_collapse: hit_layers must be non-empty");
    for (auto i : hit_layers)
        if (i >= l.layers.size())
            throw InvalidInput("distance_collapse: hit layer " + std::to_string(i) + " out of range");

    CollapsedLayering out;
    out.distance.resize(l.layers.size());
    std::size_t top = 0;
    for (std::size_t j = 0; j < l.layers.size(); ++j) {
        std::size_t best = l.layers.size();
        for (auto i : hit_layers)
            best = std::min(best, j > i ? j - i : i - j);
        out.distance[j] = best;
        top = std::max(top, best);
    }
    out.layering.layers.resize(l.layers.empty() ? 0 : top + 1);
    for (std::size_t j = 0; j < l.layers.size(); ++j) {
        auto& w = out.layering.layers[out.distance[j]];
        w.insert(w.end(), l.layers[j].begin(), l.layers[j].end());
    }
    for (auto& w : out.layering.layers)
        normalize(w);
    return out;
}

} // namespace clustered
