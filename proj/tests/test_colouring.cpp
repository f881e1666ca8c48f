#include <doctest.h>

#include <map>

#include "clustered/colouring.hpp"
#include "clustered/error.hpp"
#include "clustered/generators.hpp"
#include "oracles.hpp"

using namespace clustered;

namespace {

// Layer span (first, last) of every monochromatic component, keyed by a representative.
struct Span {
    int colour;
    std::size_t size;
    int first;
    int last;
};

std::vector<Span> component_spans(const Graph& g, const Colouring& c, const Layering& l)
{
    oracle::UnionFind uf(g.n());
    for (auto [u, v] : g.edges())
        if (c.colours[u] == c.colours[v])
            uf.unite(u, v);
    auto idx = l.index_of(g.n());
    std::map<std::size_t, Span> by_root;
    for (std::size_t v = 0; v < g.n(); ++v) {
        auto r = uf.find(v);
        auto [it, fresh] = by_root.try_emplace(r, Span{c.colours[v], uf.size_of(v), idx[v], idx[v]});
        it->second.first = std::min(it->second.first, idx[v]);
        it->second.last = std::max(it->second.last, idx[v]);
    }
    std::vector<Span> out;
    for (auto& [r, s] : by_root)
        out.push_back(s);
    return out;
}

void check_main(const Graph& g, const Layering& l, const ThreeColourResult& r)
{
    CHECK(r.variant == Variant::Main);
    CHECK(r.colouring.colours.size() == g.n());
    CHECK(r.colouring.palette <= 3);
    CHECK(r.certificate.ok);
    CHECK(r.ok());
    CHECK(r.components_within_bands);
    const auto& ch = r.chain;
    CHECK(ch.budget == 8000 * ch.k * ch.k * ch.k * ch.delta * ch.delta);
    CHECK(ch.two_colour_budget == 20 * ch.k * ch.delta);
    CHECK(ch.product == ch.inner_factor * ch.outer_factor);
    CHECK(ch.delta == std::max<std::size_t>(1, max_degree(g)));
    if (!ch.band_widths.empty())
        CHECK(ch.k == static_cast<std::size_t>(1 + *std::max_element(ch.band_widths.begin(), ch.band_widths.end())));
    const auto actual = oracle::max_monochromatic(g, r.colouring.colours);
    CHECK(actual == r.certificate.max_component);
    CHECK(actual <= ch.budget);
    if (g.n() > 0)
        CHECK(actual <= ch.product);
    // each Y_i covers 11 consecutive layers
    for (const auto& s : component_spans(g, r.colouring, l))
        CHECK(s.last - s.first <= 10);
}

void check_appendix(const Graph& g, const Layering& l, const ThreeColourResult& r)
{
    CHECK(r.variant == Variant::Appendix);
    CHECK(r.colouring.palette <= 3);
    CHECK(r.certificate.ok);
    CHECK(r.ok());
    const auto& ch = r.chain;
    CHECK(ch.product == ch.inner_factor * ch.outer_factor);
    const auto actual = oracle::max_monochromatic(g, r.colouring.colours);
    CHECK(actual == r.certificate.max_component);
    CHECK(actual <= ch.budget);
    if (g.n() > 0)
        CHECK(actual <= ch.product);
    std::size_t blue = 0;
    for (const auto& s : component_spans(g, r.colouring, l)) {
        if (s.colour == kBlue)
            blue = std::max(blue, s.size);
        if (s.size <= ch.outer_factor)
            continue;
        CHECK(s.colour != kBlue);
        // shifted indices: the band 8i-3..8i+3 for some i >= 1
        int first = s.first + 5, last = s.last + 5;
        bool inside = false;
        for (int i = 1; 8 * i - 3 <= first; ++i)
            inside = inside || (first >= 8 * i - 3 && last <= 8 * i + 3);
        CHECK(inside);
    }
    CHECK(blue == r.blue_max);
    CHECK(blue <= ch.two_colour_budget);
}

Colouring colouring(std::size_t palette, std::vector<int> colours)
{
    return Colouring{palette, std::move(colours)};
}

} // namespace

TEST_SUITE("colouring") {

TEST_CASE("monochromatic_components examples")
{
    auto c5 = oracle::cycle(5);
    auto one = monochromatic_components(c5, colouring(1, {0, 0, 0, 0, 0}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].vertices == VertexSet{0, 1, 2, 3, 4});

    auto p4 = oracle::path(4);
    auto proper = monochromatic_components(p4, colouring(2, {0, 1, 0, 1}));
    CHECK(proper.size() == 4);
    for (const auto& c : proper)
        CHECK(c.vertices.size() == 1);

    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    auto t = monochromatic_components(tri, colouring(2, {0, 0, 1}));
    REQUIRE(t.size() == 2);
    CHECK(t[0].colour == 0);
    CHECK(t[0].vertices == VertexSet{0, 1});
    CHECK(t[1].vertices == VertexSet{2});

    CHECK_THROWS_AS(monochromatic_components(tri, colouring(2, {0, 2, 1})), InvalidInput);
    CHECK_THROWS_AS(monochromatic_components(tri, colouring(2, {0, 1})), InvalidInput);
    CHECK(monochromatic_components(Graph(), colouring(0, {})).empty());
}

TEST_CASE("verify_clustering examples")
{
    auto tree = oracle::path(6);
    CHECK(verify_clustering(tree, colouring(2, {0, 1, 0, 1, 0, 1}), 2, 1).ok);

    auto c5 = oracle::cycle(5);
    auto fail = verify_clustering(c5, colouring(1, {0, 0, 0, 0, 0}), 3, 4);
    CHECK_FALSE(fail.ok);
    CHECK(fail.max_component == 5);
    REQUIRE(fail.offending);
    CHECK(fail.offending->vertices.size() == 5);

    auto palette = verify_clustering(tree, colouring(3, {0, 1, 2, 0, 1, 2}), 2, 10);
    CHECK_FALSE(palette.ok);
    CHECK(palette.max_component == 1);

    auto bad = verify_clustering(tree, colouring(2, {0, 1, 5, 0, 1, 0}), 2, 10);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.failure.empty());

    auto empty = verify_clustering(Graph(), colouring(0, {}), 0, 0);
    CHECK(empty.ok);
}

TEST_CASE("verify_clustering agrees with union-find on random colourings")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_graph(5 + rng() % 40, 0.1, rng);
        std::size_t palette = 1 + rng() % 3;
        std::vector<int> col(g.n());
        for (auto& x : col)
            x = static_cast<int>(rng() % palette);
        auto sizes = oracle::monochromatic_sizes(g, col);
        auto want = *std::max_element(sizes.begin(), sizes.end());
        auto cert = verify_clustering(g, colouring(palette, col), 3, want);
        CHECK(cert.ok);
        CHECK(cert.max_component == want);
        for (const auto& comp : cert.components)
            for (Vertex v : comp.vertices)
                CHECK(sizes[v] == comp.vertices.size());
        CHECK_FALSE(verify_clustering(g, colouring(palette, col), 3, want - 1).ok);
    }
}

TEST_CASE("two_colour_bounded examples")
{
    auto k2 = oracle::path(2);
    auto r = two_colour_bounded(k2, TreePartition{oracle::path(2), {{0}, {1}}});
    CHECK(r.colouring.colours[0] != r.colouring.colours[1]);
    CHECK(r.certificate.max_component == 1);

    Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    Graph star_tree = star;
    auto s = two_colour_bounded(star, TreePartition{star_tree, {{0}, {1}, {2}, {3}, {4}, {5}}});
    CHECK(s.certificate.max_component == 1);

    auto p10 = oracle::path(10);
    std::vector<VertexSet> parts;
    for (Vertex i = 0; i < 10; i += 2)
        parts.push_back({i, i + 1});
    auto p = two_colour_bounded(p10, TreePartition{oracle::path(5), parts});
    CHECK(p.certificate.ok);
    CHECK(p.certificate.max_component == 2);
    CHECK(verify_clustering(p10, p.colouring, 2, 2).ok);

    CHECK_THROWS_AS(two_colour_bounded(p10, TreePartition{oracle::path(1), {{0, 1}}}), InvalidInput);
}

TEST_CASE("two-colouring keeps every monochromatic component inside one part")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracle::random_connected(20 + rng() % 60, rng() % 30, 2 + rng() % 4, rng);
        auto bt = tree_partition_bounded(g, heuristic_tree_decomposition(g));
        auto r = two_colour_bounded(g, bt.partition);
        CHECK(r.colouring.palette == 2);
        std::vector<int> part_of(g.n());
        for (std::size_t x = 0; x < bt.partition.parts.size(); ++x)
            for (Vertex v : bt.partition.parts[x])
                part_of[v] = static_cast<int>(x);
        for (auto [u, v] : g.edges())
            if (r.colouring.colours[u] == r.colouring.colours[v])
                CHECK(part_of[u] == part_of[v]);
        CHECK(oracle::max_monochromatic(g, r.colouring.colours) <= bt.achieved);
        CHECK(bt.achieved <= bt.budget);
    }
}

TEST_CASE("three-colourings of the empty graph and K_1")
{
    for (auto variant : {Variant::Main, Variant::Appendix}) {
        auto e = three_colour_pipeline(Graph(), variant);
        CHECK(e.colouring.colours.empty());
        CHECK(e.certificate.ok);
        auto one = three_colour_pipeline(Graph(1), variant);
        REQUIRE(one.colouring.colours.size() == 1);
        CHECK(one.certificate.max_component == 1);
        CHECK(one.ok());
    }
}

TEST_CASE("main variant on grids and cycles")
{
    auto grid = gen_grid(20, 20);
    auto l = bfs_layering(grid, 0);
    check_main(grid, l, three_colour_main(grid, l, heuristic_decomposer()));

    auto c20 = oracle::cycle(20);
    check_main(c20, bfs_layering_multi(c20), three_colour_pipeline(c20, Variant::Main));

    auto tri = gen_triangulated_grid(15, 15);
    check_main(tri, bfs_layering_multi(tri), three_colour_pipeline(tri, Variant::Main, EliminationStrategy::MinFill));
}

TEST_CASE("appendix variant on grids and cycles")
{
    auto grid = gen_grid(20, 20);
    auto l = bfs_layering(grid, 0);
    check_appendix(grid, l, three_colour_appendix(grid, l, heuristic_decomposer()));

    auto c20 = oracle::cycle(20);
    check_appendix(c20, bfs_layering_multi(c20), three_colour_pipeline(c20, Variant::Appendix));

    auto tri = gen_triangulated_grid(15, 15);
    check_appendix(tri, bfs_layering_multi(tri), three_colour_pipeline(tri, Variant::Appendix));
}

TEST_CASE("both variants on banded instances with exact and heuristic decomposers")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto b = gen_banded(12 + seed, 6, 2, 2, seed);
        check_main(b.graph, b.layering, three_colour_main(b.graph, b.layering, heuristic_decomposer()));
        check_appendix(b.graph, b.layering, three_colour_appendix(b.graph, b.layering, heuristic_decomposer()));
    }
    auto small = gen_banded(14, 1, 1, 1, 3);
    check_main(small.graph, small.layering, three_colour_main(small.graph, small.layering, exact_decomposer()));
    check_appendix(small.graph, small.layering,
                   three_colour_appendix(small.graph, small.layering, exact_decomposer()));
}

TEST_CASE("a graph inside one first-stage band")
{
    // original layers 1..4 land in shifted 6..9, all inside G_1
    Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}});
    Layering l{{{}, {0}, {1, 4}, {2, 5}, {3, 6, 7}}};
    REQUIRE(validate_layering(g, l).ok());
    auto r = three_colour_main(g, l, heuristic_decomposer());
    check_main(g, l, r);
    CHECK(r.certificate.max_component <= r.chain.product);
}

TEST_CASE("appendix instance confined to layers away from the multiples of 8")
{
    // original layers 0..2 are shifted to 5..7, all in H
    auto b = gen_banded(3, 5, 2, 2, 17);
    auto r = three_colour_appendix(b.graph, b.layering, heuristic_decomposer());
    check_appendix(b.graph, b.layering, r);
    CHECK(r.certificate.max_component <= r.chain.outer_factor);
    CHECK(r.large_components.empty());
}

TEST_CASE("three-colourings reject invalid layerings and are deterministic")
{
    auto p4 = oracle::path(4);
    Layering bad{{{0}, {}, {1, 2, 3}}};
    CHECK_THROWS_AS(three_colour_main(p4, bad, heuristic_decomposer()), InvalidInput);
    CHECK_THROWS_AS(three_colour_appendix(p4, bad, heuristic_decomposer()), InvalidInput);
    auto broken = [](const Graph& h) {
        TreeDecomposition td{Graph(1), {{}}};
        if (h.n() > 0)
            td.bags[0].push_back(0);
        return td;
    };
    auto grid = gen_grid(6, 6);
    CHECK_THROWS_AS(three_colour_main(grid, bfs_layering_multi(grid), broken), InvalidInput);

    auto t = gen_triangulated_grid(12, 9);
    auto a = three_colour_pipeline(t, Variant::Appendix);
    auto b = three_colour_pipeline(t, Variant::Appendix);
    CHECK(a.colouring == b.colouring);
    CHECK(three_colour_pipeline(t, Variant::Main).colouring == three_colour_pipeline(t, Variant::Main).colouring);
}

TEST_CASE("variant names")
{
    CHECK(to_string(Variant::Main) == "main");
    CHECK(parse_variant("appendix") == Variant::Appendix);
    CHECK_THROWS_AS(parse_variant("other"), InvalidInput);
}

}
