#include "clustered/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "clustered/error.hpp"
#include "clustered/treewidth.hpp"

namespace clustered {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw InvalidInput("Rng::below: bound must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do
        x = next();
    while (x >= limit);
    return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

void require_dims(std::size_t rows, std::size_t cols, const char* who)
{
    if (rows == 0 || cols == 0)
        throw InvalidInput(std::string(who) + ": dimensions must be at least 1");
}

Vertex cell(std::size_t r, std::size_t c, std::size_t cols)
{
    return static_cast<Vertex>(r * cols + c);
}

} // namespace

Graph gen_grid(std::size_t rows, std::size_t cols)
{
    require_dims(rows, cols, "gen_grid");
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.emplace_back(cell(r, c, cols), cell(r, c + 1, cols));
            if (r + 1 < rows)
                edges.emplace_back(cell(r, c, cols), cell(r + 1, c, cols));
        }
    return Graph(rows * cols, edges);
}

Graph gen_triangulated_grid(std::size_t rows, std::size_t cols)
{
    require_dims(rows, cols, "gen_triangulated_grid");
    auto edges = gen_grid(rows, cols).edges();
    for (std::size_t r = 0; r + 1 < rows; ++r)
        for (std::size_t c = 0; c + 1 < cols; ++c)
            edges.emplace_back(cell(r, c, cols), cell(r + 1, c + 1, cols));
    return Graph(rows * cols, edges);
}

Graph gen_series_parallel(std::size_t n, std::uint64_t seed)
{
    if (n < 2)
        throw InvalidInput("gen_series_parallel: n must be at least 2");
    Rng rng(seed);
    std::vector<Edge> edges{{0, 1}};
    for (Vertex w = 2; static_cast<std::size_t>(w) < n; ++w) {
        auto i = rng.below(edges.size());
        auto [u, v] = edges[i];
        if (rng.coin()) {
            edges[i] = {u, w};
        } else {
            edges.emplace_back(u, w);
        }
        edges.emplace_back(v, w);
    }
    return Graph(n, edges);
}

BandedInstance gen_banded(std::size_t layers, std::size_t per_layer, std::size_t k, std::size_t delta_cap,
                          std::uint64_t seed)
{
    if (layers == 0 || per_layer == 0 || k == 0)
        throw InvalidInput("gen_banded: layers, per_layer and k must be at least 1");
    if (delta_cap > per_layer)
        throw InvalidInput("gen_banded: delta_cap " + std::to_string(delta_cap) + " exceeds the layer size " +
                           std::to_string(per_layer));
    Rng rng(seed);
    BandedInstance out;
    std::vector<Edge> edges;
    const std::size_t kk = std::min(k, per_layer - 1);

    for (std::size_t i = 0; i < layers; ++i) {
        const auto base = static_cast<Vertex>(i * per_layer);
        VertexSet layer(per_layer);
        for (std::size_t j = 0; j < per_layer; ++j)
            layer[j] = base + static_cast<Vertex>(j);
        out.layering.layers.push_back(layer);

        // k-tree: cliques of size kk+1, each new vertex attaches to kk members of one
        std::vector<VertexSet> cliques{VertexSet(layer.begin(), layer.begin() + static_cast<long>(kk + 1))};
        std::vector<Edge> local;
        for (std::size_t a = 0; a <= kk; ++a)
            for (std::size_t b = a + 1; b <= kk; ++b)
                local.emplace_back(layer[a], layer[b]);
        for (std::size_t j = kk + 1; j < per_layer; ++j) {
            VertexSet c = cliques[rng.below(cliques.size())];
            c.erase(c.begin() + static_cast<long>(rng.below(c.size())));
            for (Vertex x : c)
                local.emplace_back(x, layer[j]);
            c.push_back(layer[j]);
            cliques.push_back(std::move(c));
        }
        for (auto e : local)
            if (rng.below(4) != 0)
                edges.push_back(e);
    }

    for (std::size_t i = 0; i + 1 < layers; ++i) {
        std::vector<std::size_t> down(per_layer, 0), up(per_layer, 0);
        std::set<Edge> seen;
        const auto lo = static_cast<Vertex>(i * per_layer), hi = static_cast<Vertex>((i + 1) * per_layer);
        for (std::size_t round = 0; round < delta_cap; ++round) {
            std::vector<std::size_t> order(per_layer);
            for (std::size_t j = 0; j < per_layer; ++j)
                order[j] = j;
            rng.shuffle(order);
            for (std::size_t a : order) {
                auto b = static_cast<std::size_t>(rng.below(per_layer));
                Edge e{lo + static_cast<Vertex>(a), hi + static_cast<Vertex>(b)};
                if (down[a] < delta_cap && up[b] < delta_cap && seen.insert(e).second) {
                    ++down[a];
                    ++up[b];
                    edges.push_back(e);
                }
            }
        }
    }
    out.graph = Graph(layers * per_layer, edges);

    const std::size_t windows = layers >= 7 ? layers - 6 : 1;
    for (std::size_t s = 0; s < windows; ++s) {
        auto sub = induced_subgraph(out.graph, band(out.layering, s, 7));
        out.band_widths.push_back(width(heuristic_tree_decomposition(sub.graph)));
    }
    return out;
}

ApexedInstance gen_apexed(const GeneratorSpec& base, std::size_t apex_count, std::size_t apex_degree,
                          std::uint64_t seed)
{
    Graph g = generate(base).graph;
    const std::size_t n = g.n();
    if (apex_degree > n)
        throw InvalidInput("gen_apexed: apex_degree " + std::to_string(apex_degree) + " exceeds base size " +
                           std::to_string(n));
    Rng rng(seed);
    auto edges = g.edges();
    ApexedInstance out;
    std::vector<Vertex> pool(n);
    for (std::size_t a = 0; a < apex_count; ++a) {
        const auto apex = static_cast<Vertex>(n + a);
        for (std::size_t v = 0; v < n; ++v)
            pool[v] = static_cast<Vertex>(v);
        for (std::size_t j = 0; j < apex_degree; ++j) {   // partial Fisher-Yates
            std::swap(pool[j], pool[j + rng.below(n - j)]);
            edges.emplace_back(pool[j], apex);
        }
        out.apexes.push_back(apex);
    }
    out.graph = Graph(n + apex_count, edges);
    return out;
}

Generated generate(const GeneratorSpec& spec)
{
    auto need = [&](std::size_t arity) {
        if (spec.params.size() != arity)
            throw InvalidInput("family " + spec.family + " takes " + std::to_string(arity) + " parameters, got " +
                               std::to_string(spec.params.size()));
    };
    const auto& p = spec.params;
    Generated out;
    if (spec.family == "grid") {
        need(2);
        out.graph = gen_grid(p[0], p[1]);
    } else if (spec.family == "trigrid") {
        need(2);
        out.graph = gen_triangulated_grid(p[0], p[1]);
    } else if (spec.family == "sp") {
        need(1);
        out.graph = gen_series_parallel(p[0], spec.seed);
    } else if (spec.family == "banded") {
        need(4);
        auto b = gen_banded(p[0], p[1], p[2], p[3], spec.seed);
        out.graph = std::move(b.graph);
        out.layering = std::move(b.layering);
        out.has_layering = true;
    } else {
        throw InvalidInput("unknown generator family '" + spec.family + "'");
    }
    return out;
}

std::string to_string(const GeneratorSpec& spec)
{
    std::string s = spec.family + ":";
    for (std::size_t i = 0; i < spec.params.size(); ++i)
        s += (i ? "," : "") + std::to_string(spec.params[i]);
    return s;
}

GeneratorSpec parse_generator_spec(const std::string& text, std::uint64_t seed)
{
    GeneratorSpec spec;
    spec.seed = seed;
    auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (colon == std::string::npos)
        return spec;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty() || item[0] == '-')
            throw InvalidInput("generator parameter '" + item + "' is not a non-negative integer");
        spec.params.push_back(v);
    }
    return spec;
}

} // namespace clustered
