#include "clustered/colouring.hpp"

#include <algorithm>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

namespace {

void check_palette(const Graph& g, const Colouring& c)
{
    if (c.colours.size() != g.n())
        throw InvalidInput("colouring has " + std::to_string(c.colours.size()) + " entries for " +
                           std::to_string(g.n()) + " vertices");
    for (std::size_t v = 0; v < c.colours.size(); ++v)
        if (c.colours[v] < 0 || static_cast<std::size_t>(c.colours[v]) >= c.palette)
            throw InvalidInput("vertex " + std::to_string(v) + " has colour " + std::to_string(c.colours[v]) +
                               " outside the palette of size " + std::to_string(c.palette));
}

} // namespace

std::vector<MonochromaticComponent> monochromatic_components(const Graph& g, const Colouring& c)
{
    check_palette(g, c);
    std::vector<char> seen(g.n(), 0);
    std::vector<MonochromaticComponent> out;
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (seen[s])
            continue;
        int colour = c.colours[s];
        MonochromaticComponent comp{colour, {static_cast<Vertex>(s)}};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.vertices.size(); ++head)
            for (Vertex w : g.neighbours(comp.vertices[head])) {
                auto wi = static_cast<std::size_t>(w);
                if (!seen[wi] && c.colours[wi] == colour) {
                    seen[wi] = 1;
                    comp.vertices.push_back(w);
                }
            }
        normalize(comp.vertices);
        out.push_back(std::move(comp));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.colour < b.colour; });
    return out;
}

ClusterCertificate verify_clustering(const Graph& g, const Colouring& c, std::size_t max_colours,
                                     std::size_t bound)
{
    ClusterCertificate cert;
    cert.palette = c.palette;
    cert.max_colours = max_colours;
    cert.bound = bound;
    try {
        cert.components = monochromatic_components(g, c);
    } catch (const InvalidInput& e) {
        cert.failure = e.what();
        return cert;
    }
    cert.per_colour_max.assign(c.palette, 0);
    const MonochromaticComponent* worst = nullptr;
    for (const auto& comp : cert.components) {
        auto& slot = cert.per_colour_max[static_cast<std::size_t>(comp.colour)];
        slot = std::max(slot, comp.vertices.size());
        if (!worst || comp.vertices.size() > worst->vertices.size())
            worst = &comp;
    }
    cert.max_component = worst ? worst->vertices.size() : 0;
    if (c.palette > max_colours) {
        cert.failure = "palette of " + std::to_string(c.palette) + " colours exceeds " + std::to_string(max_colours);
        return cert;
    }
    if (cert.max_component > bound) {
        cert.failure = "monochromatic component of " + std::to_string(cert.max_component) +
                       " vertices exceeds the bound " + std::to_string(bound);
        cert.offending = *worst;
        return cert;
    }
    cert.ok = true;
    return cert;
}

TwoColourResult two_colour_bounded(const Graph& g, const TreePartition& tp)
{
    auto rep = validate_tree_partition(g, tp);
    if (!rep)
        throw InvalidInput("two_colour_bounded: invalid tree-partition: " + rep.summary());

    std::vector<int> side(tp.tree.n(), -1);
    for (std::size_t root = 0; root < tp.tree.n(); ++root) {
        if (side[root] >= 0)
            continue;
        side[root] = 0;
        std::vector<Vertex> queue{static_cast<Vertex>(root)};
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex y : tp.tree.neighbours(queue[head]))
                if (side[static_cast<std::size_t>(y)] < 0) {
                    side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(queue[head])];
                    queue.push_back(y);
                }
    }
    TwoColourResult out;
    out.colouring.palette = 2;
    out.colouring.colours.assign(g.n(), 0);
    for (std::size_t x = 0; x < tp.parts.size(); ++x)
        for (Vertex v : tp.parts[x])
            out.colouring.colours[static_cast<std::size_t>(v)] = side[x];
    out.certificate = verify_clustering(g, out.colouring, 2, width(tp));
    if (!out.certificate.ok)
        throw BudgetExceeded("two_colour_bounded: " + out.certificate.failure);
    return out;
}

std::string to_string(Variant v)
{
    return v == Variant::Main ? "main" : "appendix";
}

Variant parse_variant(const std::string& s)
{
    if (s == "main")
        return Variant::Main;
    if (s == "appendix")
        return Variant::Appendix;
    throw InvalidInput("unknown variant '" + s + "' (expected main or appendix)");
}

bool ThreeColourResult::ok() const
{
    if (!certificate.ok)
        return false;
    if (!colouring.colours.empty() && certificate.max_component > chain.product)
        return false;
    if (variant == Variant::Main)
        return components_within_bands;
    return band_containment && blue_max <= chain.outer_factor && blue_max <= chain.two_colour_budget;
}

namespace {

constexpr std::size_t kShift = 5;

struct Stage {
    std::vector<int> parity;     // per local vertex
    std::size_t clustering = 0;
    std::size_t tp_width = 0;
};

// Two-colours a graph through a bounded tree-partition of the given decomposition.
Stage colour_stage(const Graph& h, const TreeDecomposition& td)
{
    Stage st;
    if (h.n() == 0)
        return st;
    auto rep = validate_tree_decomposition(h, td);
    if (!rep)
        throw InvalidInput("band decomposition invalid: " + rep.summary());
    auto tp = tree_partition_bounded(h, td);
    auto two = two_colour_bounded(h, tp.partition);
    st.parity = std::move(two.colouring.colours);
    st.clustering = two.certificate.max_component;
    st.tp_width = tp.achieved;
    return st;
}

TreeDecomposition decompose_checked(const Graph& band_graph, const Decomposer& decomposer, BoundChain& chain)
{
    auto td = decomposer(band_graph);
    auto rep = validate_tree_decomposition(band_graph, td);
    if (!rep)
        throw InvalidInput("band decomposition invalid: " + rep.summary());
    chain.band_widths.push_back(width(td));
    return td;
}

// Positions of `subset` inside the sorted `superset`.
std::vector<Vertex> positions_in(const VertexSet& superset, const VertexSet& subset)
{
    std::vector<Vertex> pos;
    pos.reserve(subset.size());
    for (Vertex v : subset) {
        auto it = std::lower_bound(superset.begin(), superset.end(), v);
        if (it == superset.end() || *it != v)
            throw Error("internal: band does not contain the contracted graph");
        pos.push_back(static_cast<Vertex>(it - superset.begin()));
    }
    return pos;
}

// Components of g[s] as sets of global ids.
std::vector<VertexSet> components_of(const Graph& g, const VertexSet& s)
{
    auto sub = induced_subgraph(g, s);
    std::vector<VertexSet> out;
    for (auto& comp : connected_components(sub.graph)) {
        VertexSet global;
        for (Vertex u : comp)
            global.push_back(sub.to_parent[static_cast<std::size_t>(u)]);
        out.push_back(std::move(global));
    }
    return out;
}

struct Contracted {
    Graph graph;
    ContractionMap map;
    VertexSet vertices;   // global ids of the uncontracted source, sorted
    std::size_t group_count = 0;
};

// Contracts `groups` (global ids, each connected, all inside `vertices`) in g[vertices].
Contracted contract_in(const Graph& g, const VertexSet& vertices, const std::vector<VertexSet>& groups)
{
    auto sub = induced_subgraph(g, vertices);
    std::vector<VertexSet> local;
    for (const auto& grp : groups)
        local.push_back(make_set(positions_in(vertices, grp)));
    auto [z, map] = contract_components(sub.graph, local);
    return {std::move(z), std::move(map), vertices, groups.size()};
}

// Decomposition of a contracted band graph derived from the band's own decomposition.
TreeDecomposition minor_decomposition(const TreeDecomposition& band_td, const VertexSet& band_vertices,
                                      const Contracted& z)
{
    auto restricted = restrict_decomposition(band_td, positions_in(band_vertices, z.vertices), band_vertices.size());
    return contract_decomposition(restricted, z.map);
}

void finish_chain(const Graph& g, ThreeColourResult& res)
{
    auto& ch = res.chain;
    int w = -1;
    for (int bw : ch.band_widths)
        w = std::max(w, bw);
    ch.k = static_cast<std::size_t>(w + 1);
    ch.delta = std::max<std::size_t>(1, max_degree(g));
    ch.budget = 8000 * ch.k * ch.k * ch.k * ch.delta * ch.delta;
    ch.two_colour_budget = 20 * ch.k * ch.delta;
    ch.product = ch.inner_factor * ch.outer_factor;
    res.certificate = verify_clustering(g, res.colouring, 3, ch.budget);
}

void require_layering(const Graph& g, const Layering& l)
{
    auto rep = validate_layering(g, l);
    if (!rep)
        throw InvalidInput("invalid layering: " + rep.summary());
}

} // namespace

ThreeColourResult three_colour_main(const Graph& g, const Layering& l, const Decomposer& decomposer)
{
    require_layering(g, l);
    ThreeColourResult res;
    res.variant = Variant::Main;
    res.layer_shift = kShift;
    res.colouring.palette = 3;
    res.colouring.colours.assign(g.n(), -1);
    if (g.n() == 0) {
        res.certificate = verify_clustering(g, res.colouring, 3, 0);
        return res;
    }

    const Layering lay = shift_layering(l, kShift);
    const auto idx = lay.index_of(g.n());
    const std::size_t layers = lay.size();
    auto& c = res.colouring.colours;
    auto& chain = res.chain;

    // c_i on G_i = G[V_6i .. V_6i+4], colours i and i+1 (mod 3)
    std::vector<int> first(g.n(), -1);
    for (std::size_t i = 0; 6 * i < layers; ++i) {
        VertexSet gi = band(lay, 6 * i, 5);
        if (gi.empty())
            continue;
        auto sub = induced_subgraph(g, gi);
        auto td = decompose_checked(sub.graph, decomposer, chain);
        auto st = colour_stage(sub.graph, td);
        chain.outer_factor = std::max(chain.outer_factor, st.clustering);
        chain.tree_partition_width = std::max(chain.tree_partition_width, st.tp_width);
        for (std::size_t u = 0; u < gi.size(); ++u)
            first[static_cast<std::size_t>(gi[u])] =
                static_cast<int>(st.parity[u] == 0 ? i % 3 : (i + 1) % 3);
    }

    // retained colours and the band Y_i holding every vertex
    std::vector<int> yband(g.n(), -1);
    for (std::size_t v = 0; v < g.n(); ++v) {
        auto j = static_cast<std::size_t>(idx[v]);
        int i = static_cast<int>(j / 6);
        std::size_t r = j % 6;
        int own = i % 3, next = (i + 1) % 3;
        bool is_own = first[v] == own;
        switch (r) {
        case 0:
        case 1:
            if (is_own)
                c[v] = own;
            yband[v] = is_own ? i : i - 1;
            break;
        case 2:
            c[v] = first[v];
            yband[v] = is_own ? i : i - 1;
            break;
        case 3:
        case 4:
            if (first[v] == next)
                c[v] = next;
            yband[v] = is_own ? i : i - 1;
            break;
        default:
            yband[v] = i;
        }
        if (yband[v] < 0)
            throw Error("internal: vertex " + std::to_string(v) + " falls before the first band");
    }

    std::vector<VertexSet> ysets;
    for (std::size_t v = 0; v < g.n(); ++v) {
        auto y = static_cast<std::size_t>(yband[v]);
        if (ysets.size() <= y)
            ysets.resize(y + 1);
        ysets[y].push_back(static_cast<Vertex>(v));
    }

    // Z_i from G[Y_i], coloured i and i-1 (mod 3)
    for (std::size_t i = 0; i < ysets.size(); ++i) {
        const VertexSet& y = ysets[i];
        if (y.empty())
            continue;
        const auto base = static_cast<int>(6 * i);
        const int own = static_cast<int>(i % 3), prev = static_cast<int>((i + 2) % 3);
        VertexSet a, b;
        for (Vertex v : y) {
            int j = idx[static_cast<std::size_t>(v)];
            if (j >= base && j <= base + 3 && first[static_cast<std::size_t>(v)] == own)
                a.push_back(v);
            else if (j >= base + 7 && j <= base + 10)
                b.push_back(v);
        }
        auto groups = components_of(g, a);
        const std::size_t a_groups = groups.size();
        for (auto& comp : components_of(g, b))
            groups.push_back(std::move(comp));

        auto z = contract_in(g, y, groups);
        VertexSet band_vertices = band(lay, 6 * i, 11);
        auto band_sub = induced_subgraph(g, band_vertices);
        auto band_td = decompose_checked(band_sub.graph, decomposer, chain);
        auto st = colour_stage(z.graph, minor_decomposition(band_td, band_vertices, z));
        chain.inner_factor = std::max(chain.inner_factor, st.clustering);
        chain.tree_partition_width = std::max(chain.tree_partition_width, st.tp_width);

        auto zcolour = [&](std::size_t node) { return st.parity[node] == 0 ? own : prev; };
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const int keep_layer = gi < a_groups ? base + 3 : base + 7;
            for (Vertex v : groups[gi])
                if (idx[static_cast<std::size_t>(v)] == keep_layer)
                    c[static_cast<std::size_t>(v)] = zcolour(gi);
        }
        for (std::size_t node = groups.size(); node < z.map.groups.size(); ++node) {
            Vertex v = y[static_cast<std::size_t>(z.map.groups[node].front())];
            c[static_cast<std::size_t>(v)] = zcolour(node);
        }
    }

    for (std::size_t v = 0; v < g.n(); ++v)
        if (c[v] < 0)
            throw Error("internal: vertex " + std::to_string(v) + " left uncoloured");

    // contracted groups are G_i components, or single vertices when no G_i is populated
    chain.outer_factor = std::max<std::size_t>(chain.outer_factor, 1);
    finish_chain(g, res);
    for (const auto& comp : res.certificate.components) {
        int y = yband[static_cast<std::size_t>(comp.vertices.front())];
        for (Vertex v : comp.vertices)
            if (yband[static_cast<std::size_t>(v)] != y)
                res.components_within_bands = false;
    }
    return res;
}

ThreeColourResult three_colour_appendix(const Graph& g, const Layering& l, const Decomposer& decomposer)
{
    require_layering(g, l);
    ThreeColourResult res;
    res.variant = Variant::Appendix;
    res.layer_shift = kShift;
    res.colouring.palette = 3;
    res.colouring.colours.assign(g.n(), -1);
    if (g.n() == 0) {
        res.certificate = verify_clustering(g, res.colouring, 3, 0);
        return res;
    }

    const Layering lay = shift_layering(l, kShift);
    const auto idx = lay.index_of(g.n());
    const auto layers = static_cast<int>(lay.size());
    auto& c = res.colouring.colours;
    auto& chain = res.chain;

    // H: layers not divisible by 8, split into blocks of seven layers 8b+1 .. 8b+7
    VertexSet h_vertices;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (idx[v] % 8 != 0)
            h_vertices.push_back(static_cast<Vertex>(v));
    auto h = induced_subgraph(g, h_vertices);
    std::vector<TreeDecomposition> block_tds;
    std::vector<std::vector<Vertex>> block_maps;
    for (int b = 0; 8 * b + 1 < layers; ++b) {
        VertexSet block = band(lay, static_cast<std::size_t>(8 * b + 1), 7);
        if (block.empty())
            continue;
        auto sub = induced_subgraph(g, block);
        block_tds.push_back(decompose_checked(sub.graph, decomposer, chain));
        block_maps.push_back(positions_in(h_vertices, block));
    }
    auto h_stage = colour_stage(h.graph, join_decompositions(block_tds, block_maps));
    chain.outer_factor = h_stage.clustering;
    chain.tree_partition_width = h_stage.tp_width;

    std::vector<char> yellow(g.n(), 0);
    for (std::size_t u = 0; u < h_vertices.size(); ++u) {
        auto v = static_cast<std::size_t>(h_vertices[u]);
        if (h_stage.parity[u] == 0) {
            c[v] = kBlue;
            continue;
        }
        yellow[v] = 1;
        switch (idx[v] % 8) {
        case 4:
            c[v] = kRed;
            break;
        case 3:
        case 5:
            c[v] = kGreen;
            break;
        default:
            break;
        }
    }

    for (int i = 1; 8 * i - 3 < layers; ++i) {
        VertexSet uplus, low, high;
        for (std::size_t v = 0; v < g.n(); ++v) {
            int j = idx[v];
            if (j == 8 * i) {
                uplus.push_back(static_cast<Vertex>(v));
            } else if (yellow[v] && j >= 8 * i - 3 && j <= 8 * i + 3) {
                uplus.push_back(static_cast<Vertex>(v));
                if (j <= 8 * i - 2)
                    low.push_back(static_cast<Vertex>(v));
                else if (j >= 8 * i + 2)
                    high.push_back(static_cast<Vertex>(v));
            }
        }
        if (uplus.empty())
            continue;
        auto groups = components_of(g, low);
        const std::size_t low_groups = groups.size();
        for (auto& comp : components_of(g, high))
            groups.push_back(std::move(comp));

        auto z = contract_in(g, uplus, groups);
        VertexSet band_vertices = band(lay, static_cast<std::size_t>(8 * i - 3), 7);
        auto band_sub = induced_subgraph(g, band_vertices);
        auto band_td = decompose_checked(band_sub.graph, decomposer, chain);
        auto st = colour_stage(z.graph, minor_decomposition(band_td, band_vertices, z));
        chain.inner_factor = std::max(chain.inner_factor, st.clustering);
        chain.tree_partition_width = std::max(chain.tree_partition_width, st.tp_width);

        auto zcolour = [&](std::size_t node) { return st.parity[node] == 0 ? kRed : kGreen; };
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const int keep_layer = gi < low_groups ? 8 * i - 2 : 8 * i + 2;
            for (Vertex v : groups[gi])
                if (idx[static_cast<std::size_t>(v)] == keep_layer)
                    c[static_cast<std::size_t>(v)] = zcolour(gi);
        }
        for (std::size_t node = groups.size(); node < z.map.groups.size(); ++node) {
            Vertex v = uplus[static_cast<std::size_t>(z.map.groups[node].front())];
            c[static_cast<std::size_t>(v)] = zcolour(node);
        }
    }

    for (std::size_t v = 0; v < g.n(); ++v)
        if (c[v] < 0)
            throw Error("internal: vertex " + std::to_string(v) + " left uncoloured");

    // a vertex-only stage (no yellow anywhere) still bounds clusters by the H stage
    chain.inner_factor = std::max<std::size_t>(chain.inner_factor, 1);
    finish_chain(g, res);

    res.blue_max = res.certificate.per_colour_max.empty() ? 0 : res.certificate.per_colour_max[kBlue];
    for (const auto& comp : res.certificate.components) {
        if (comp.vertices.size() <= chain.outer_factor)
            continue;
        LargeComponent lc{comp.colour, comp.vertices.size(), lay.size(), 0, false};
        for (Vertex v : comp.vertices) {
            auto j = static_cast<std::size_t>(idx[static_cast<std::size_t>(v)]);
            lc.first_layer = std::min(lc.first_layer, j);
            lc.last_layer = std::max(lc.last_layer, j);
        }
        std::size_t i = (lc.first_layer + 3) / 8;   // the only band that can start at or below first_layer
        lc.inside_band = comp.colour != kBlue && i >= 1 && lc.first_layer + 3 >= 8 * i &&
                         lc.last_layer <= 8 * i + 3;
        if (!lc.inside_band)
            res.band_containment = false;
        res.large_components.push_back(lc);
    }
    return res;
}

ThreeColourResult three_colour_pipeline(const Graph& g, Variant variant, EliminationStrategy strategy)
{
    auto l = bfs_layering_multi(g);
    auto dec = heuristic_decomposer(strategy);
    return variant == Variant::Main ? three_colour_main(g, l, dec) : three_colour_appendix(g, l, dec);
}

} // namespace clustered
