#include <doctest.h>

#include "clustered/error.hpp"
#include "clustered/generators.hpp"
#include "clustered/layered.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clustered;

namespace {

Layering singletons(int count)
{
    Layering l;
    for (int i = 0; i < count; ++i)
        l.layers.push_back({i});
    return l;
}

TreeDecomposition pair_bags(std::size_t n)
{
    TreeDecomposition td{oracle::path(n - 1), {}};
    for (Vertex i = 0; static_cast<std::size_t>(i) + 1 < n; ++i)
        td.bags.push_back({i, i + 1});
    return td;
}

std::size_t measured_layered_width(const Graph& g, const TreeDecomposition& td, const Layering& l)
{
    auto idx = l.index_of(g.n());
    std::size_t best = 0;
    for (const auto& bag : td.bags)
        for (std::size_t i = 0; i < l.size(); ++i) {
            std::size_t c = 0;
            for (Vertex v : bag)
                c += idx[v] == static_cast<int>(i);
            best = std::max(best, c);
        }
    return best;
}

} // namespace

TEST_SUITE("layered") {

TEST_CASE("layered_width_of_decomposition")
{
    auto p6 = oracle::path(6);
    CHECK(layered_width_of_decomposition(p6, pair_bags(6), singletons(6)) == 1);
    TreeDecomposition single{Graph(3), {{0}, {1}, {2}}};
    single.tree = oracle::path(3);
    CHECK(layered_width_of_decomposition(Graph(3), single, Layering{{{0, 1, 2}}}) == 1);
    Layering one{{{0, 1, 2, 3, 4, 5}}};
    CHECK(layered_width_of_decomposition(p6, pair_bags(6), one) == 2);
    CHECK_THROWS_AS(layered_width_of_decomposition(p6, pair_bags(5), one), InvalidInput);
    CHECK_THROWS_AS(layered_width_of_decomposition(p6, pair_bags(6), singletons(5)), InvalidInput);
}

TEST_CASE("validate_h_partition")
{
    auto c5 = oracle::cycle(5);
    CHECK(validate_h_partition(c5, HPartition{Graph(1), {{0, 1, 2, 3, 4}}}).ok());
    CHECK(validate_h_partition(c5, HPartition{c5, {{0}, {1}, {2}, {3}, {4}}}).ok());
    auto rep = validate_h_partition(c5, HPartition{oracle::path(5), {{0}, {1}, {2}, {3}, {4}}});
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].kind == Violation::Kind::Edge);
    CHECK(rep.violations[0].u == 0);
    CHECK(rep.violations[0].v == 4);
    CHECK_FALSE(validate_h_partition(c5, HPartition{Graph(2), {{0, 1, 2, 3, 4}, {}}}).ok());
    CHECK_FALSE(validate_h_partition(c5, HPartition{Graph(2), {{0, 1, 2}, {2, 3, 4}}}).ok());
    CHECK_FALSE(validate_h_partition(c5, HPartition{Graph(2), {{0, 1}, {2, 3}}}).ok());
    CHECK_FALSE(validate_h_partition(c5, HPartition{Graph(2), {{0, 1, 2, 3, 4}}}).ok());
}

TEST_CASE("partition_layered_width")
{
    auto p4 = oracle::path(4);
    CHECK(partition_layered_width(p4, HPartition{p4, {{0}, {1}, {2}, {3}}}, singletons(4)) == 1);
    CHECK(partition_layered_width(p4, HPartition{Graph(1), {{0, 1, 2, 3}}}, singletons(4)) == 1);
    CHECK(partition_layered_width(p4, HPartition{Graph(1), {{0, 1, 2, 3}}}, Layering{{{0, 1, 2, 3}}}) == 4);
}

TEST_CASE("validate_kl_partition catches false claims")
{
    auto g = gen_grid(4, 4);
    auto klp = fixture::singleton_partition(g, bfs_layering(g, 0));
    CHECK(validate_kl_partition(g, klp).ok());
    auto low_k = klp;
    low_k.k = 0;
    CHECK_FALSE(validate_kl_partition(g, low_k).ok());
    auto low_l = klp;
    low_l.l = 0;
    CHECK_FALSE(validate_kl_partition(g, low_l).ok());
    auto bad_layers = klp;
    bad_layers.layering = Layering{{{0}, {}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}}};
    CHECK_FALSE(validate_kl_partition(g, bad_layers).ok());
    auto bad_witness = klp;
    bad_witness.witness.bags.back().clear();
    CHECK_FALSE(validate_kl_partition(g, bad_witness).ok());
    auto cyclic = klp;
    cyclic.witness.tree = oracle::cycle(klp.witness.bags.size());
    CHECK_FALSE(validate_kl_partition(g, cyclic).ok());
}

TEST_CASE("layered_td_from_partition examples")
{
    auto g = gen_grid(5, 5);
    auto l = bfs_layering(g, 0);
    auto klp = fixture::singleton_partition(g, l);
    auto ltd = layered_td_from_partition(g, klp);
    CHECK(oracle::decomposition_ok(g, ltd.td.tree, ltd.td.bags));
    CHECK(ltd.layered_width == layered_width_of_decomposition(g, klp.witness, l));

    KLPartition one{HPartition{Graph(1), {{}}}, l, TreeDecomposition{Graph(1), {{0}}}, 0, 0};
    for (Vertex v = 0; v < 25; ++v)
        one.hp.parts[0].push_back(v);
    one.l = 5;
    auto whole = layered_td_from_partition(g, one);
    CHECK(whole.td.bags.size() == 1);
    CHECK(whole.layered_width == 5);

    auto p8 = oracle::path(8);
    KLPartition pairs;
    pairs.hp = HPartition{oracle::path(4), {{0, 1}, {2, 3}, {4, 5}, {6, 7}}};
    pairs.layering = singletons(8);
    pairs.witness = pair_bags(4);
    pairs.k = 1;
    pairs.l = 1;
    auto lt = layered_td_from_partition(p8, pairs);
    CHECK(oracle::decomposition_ok(p8, lt.td.tree, lt.td.bags));
    CHECK(lt.layered_width <= 2);

    pairs.k = 0;
    CHECK_THROWS_AS(layered_td_from_partition(p8, pairs), InvalidInput);
}

TEST_CASE("layered_td_from_partition on random partitions")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracle::random_connected(10 + rng() % 30, rng() % 20, 4, rng);
        auto l = bfs_layering(g, 0);
        auto klp = fixture::random_partition(g, l, 2 + rng() % 12, rng);
        REQUIRE(validate_kl_partition(g, klp).ok());
        auto ltd = layered_td_from_partition(g, klp);
        CHECK(oracle::decomposition_ok(g, ltd.td.tree, ltd.td.bags));
        CHECK(ltd.layered_width == measured_layered_width(g, ltd.td, l));
        CHECK(ltd.layered_width <= (klp.k + 1) * klp.l);
    }
}

TEST_CASE("power_layered_decomposition examples")
{
    auto p6 = oracle::path(6);
    auto td = pair_bags(6);
    auto id = power_layered_decomposition(p6, td, singletons(6), 1);
    CHECK(id.power == p6);
    CHECK(id.ltd.td.bags == td.bags);
    CHECK(id.ltd.layering == singletons(6));

    auto k1 = power_layered_decomposition(Graph(1), TreeDecomposition{Graph(1), {{0}}}, Layering{{{0}}}, 3);
    CHECK(k1.ltd.layered_width == 1);

    auto sq = power_layered_decomposition(p6, td, singletons(6), 2);
    CHECK(sq.k == 1);
    CHECK(sq.delta == 2);
    CHECK(sq.bound == 8);
    CHECK(sq.strict);
    CHECK(oracle::decomposition_ok(sq.power, sq.ltd.td.tree, sq.ltd.td.bags));
    CHECK(sq.ltd.layered_width < 8);
    CHECK(sq.within_bound());

    CHECK_THROWS_AS(power_layered_decomposition(p6, td, singletons(6), 0), InvalidInput);
}

TEST_CASE("power decompositions on random bounded-degree graphs")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_connected(5 + rng() % 36, rng() % 25, 2 + rng() % 3, rng);
        auto td = heuristic_tree_decomposition(g);
        auto l = bfs_layering(g, 0);
        for (std::size_t p = 1; p <= 3; ++p) {
            auto pd = power_layered_decomposition(g, td, l, p);
            auto d = oracle::all_pairs_distances(g);
            bool same = true;
            for (std::size_t u = 0; u < g.n(); ++u)
                for (std::size_t v = u + 1; v < g.n(); ++v)
                    same = same && pd.power.has_edge(u, v) == (d[u][v] <= static_cast<int>(p));
            CHECK(same);
            CHECK(oracle::decomposition_ok(pd.power, pd.ltd.td.tree, pd.ltd.td.bags));
            CHECK(validate_layering(pd.power, pd.ltd.layering).ok());
            CHECK(pd.ltd.layered_width == measured_layered_width(pd.power, pd.ltd.td, pd.ltd.layering));
            std::size_t bound = 2 * p * pd.k * (p >= 2 ? pd.delta : 1);
            if (pd.delta >= 2)
                CHECK(pd.ltd.layered_width < bound);
        }
    }
}

TEST_CASE("power decomposition of a matching uses the inclusive bound")
{
    Graph m(4, {{0, 1}, {2, 3}});
    auto pd = power_layered_decomposition(m, heuristic_tree_decomposition(m), bfs_layering_multi(m), 2);
    CHECK_FALSE(pd.strict);
    CHECK(pd.within_bound());
}

TEST_CASE("drop_apices examples")
{
    // g - a = P_6 on ids 0..5, apex 6 adjacent to 2 and 5
    auto p6 = oracle::path(6);
    auto rest = fixture::singleton_partition(p6, singletons(6));
    auto edges = p6.edges();
    edges.emplace_back(2, 6);
    edges.emplace_back(5, 6);
    Graph g(7, edges);

    auto same = drop_apices(p6, {}, rest);
    CHECK(same.klp.hp.parts == rest.hp.parts);
    CHECK(same.klp.layering == rest.layering);

    auto r = drop_apices(g, {6}, rest);
    CHECK(r.hit_layers == std::vector<std::size_t>{2, 5});
    CHECK(r.apex_degree == 2);
    CHECK(r.width_bound == 4);
    REQUIRE(r.klp.layering.size() == 3);
    CHECK(r.klp.layering.layers[0] == VertexSet{2, 5, 6});
    CHECK(r.klp.layering.layers[1] == VertexSet{1, 3, 4});
    CHECK(r.klp.layering.layers[2] == VertexSet{0});
    CHECK(validate_kl_partition(g, r.klp).ok());
    CHECK(r.klp.k == 2);
    CHECK(width(r.klp.witness) <= 2);
    CHECK(partition_layered_width(g, r.klp.hp, r.klp.layering) == 1);
    CHECK(r.klp.hp.parts.back() == VertexSet{6});
}

TEST_CASE("apex adjacent to one whole layer")
{
    auto grid = gen_grid(4, 4);
    auto l = bfs_layering(grid, 0);
    auto rest = fixture::singleton_partition(grid, l);
    auto edges = grid.edges();
    for (Vertex v : l.layers[3])
        edges.emplace_back(v, 16);
    Graph g(17, edges);
    auto r = drop_apices(g, {16}, rest);
    CHECK(r.hit_layers == std::vector<std::size_t>{3});
    CHECK(validate_kl_partition(g, r.klp).ok());
    CHECK(r.klp.layering.layers[0] == make_set({3, 6, 9, 12, 16}));
}

TEST_CASE("drop_apices rejects a partition that does not fit g - a")
{
    auto p6 = oracle::path(6);
    auto rest = fixture::singleton_partition(oracle::path(5), singletons(5));
    CHECK_THROWS_AS(drop_apices(p6, {5}, fixture::singleton_partition(p6, singletons(6))), InvalidInput);
    CHECK_THROWS_AS(drop_apices(p6, {9}, rest), InvalidInput);
}

TEST_CASE("drop_apices on random apexed graphs")
{
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        GeneratorSpec base{"banded", {6, 4, 2, 2}, seed};
        auto inst = gen_apexed(base, 1 + seed % 3, 1 + seed % 5, seed + 100);
        auto rest_ids = rest_vertices(inst.graph, inst.apexes);
        auto sub = induced_subgraph(inst.graph, rest_ids);
        auto rest = fixture::singleton_partition(sub.graph, bfs_layering_multi(sub.graph));
        auto r = drop_apices(inst.graph, inst.apexes, rest);
        CHECK(validate_kl_partition(inst.graph, r.klp).ok());
        CHECK(width(r.klp.witness) <= static_cast<int>(rest.k) + 1);
        std::size_t deg = 1;
        for (Vertex a : inst.apexes)
            deg = std::max(deg, inst.graph.degree(a));
        CHECK(r.apex_degree == deg);
        CHECK(partition_layered_width(inst.graph, r.klp.hp, r.klp.layering) <= 2 * rest.l * deg * inst.apexes.size());
        // every neighbour of an apex is in W_0
        auto idx = r.klp.layering.index_of(inst.graph.n());
        for (Vertex a : inst.apexes)
            for (Vertex w : inst.graph.neighbours(a))
                CHECK(idx[w] == 0);
    }
}

TEST_CASE("embed_in_product examples")
{
    auto g = gen_grid(3, 4);
    auto l = bfs_layering(g, 0);
    auto klp = fixture::singleton_partition(g, l);
    auto emb = embed_in_product(g, klp);
    CHECK(emb.ok());
    for (std::size_t v = 0; v < g.n(); ++v)
        CHECK(emb.position[v].copy == 0);

    KLPartition one;
    one.hp = HPartition{Graph(1), {{}}};
    for (Vertex v = 0; v < 12; ++v)
        one.hp.parts[0].push_back(v);
    one.layering = l;
    one.witness = TreeDecomposition{Graph(1), {{0}}};
    one.l = partition_layered_width(g, one.hp, l);
    auto e1 = embed_in_product(g, one);
    CHECK(e1.ok());

    // a host missing an edge: the embedding names the edge it cannot place
    auto broken = klp;
    auto edges = g.edges();
    edges.erase(edges.begin());
    broken.hp.host = Graph(g.n(), edges);
    auto bad = embed_in_product(g, broken);
    CHECK_FALSE(bad.ok());
    CHECK(bad.failing_edges == std::vector<Edge>{g.edges().front()});
    auto lying = klp;
    lying.hp.parts = {{0, 1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {}};
    lying.l = 1;
    lying.hp.parts.pop_back();
    lying.hp.host = quotient(g, lying.hp.parts);
    lying.layering = Layering{{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}};
    CHECK_THROWS_AS(embed_in_product(g, lying), InvalidInput);
}

TEST_CASE("embed_in_product reports edges that skip a layer")
{
    Graph g(3, {{0, 1}, {1, 2}});
    KLPartition klp;
    klp.hp = HPartition{Graph(1), {{0, 1, 2}}};
    klp.layering = Layering{{{0}, {1}, {2}}};
    klp.witness = TreeDecomposition{Graph(1), {{0}}};
    klp.l = 1;
    auto emb = embed_in_product(g, klp);
    CHECK(emb.ok());
    klp.layering = Layering{{{0}, {}, {1, 2}}};
    klp.l = 2;
    auto skip = embed_in_product(g, klp);
    CHECK(skip.failing_edges == std::vector<Edge>{{0, 1}});
    // copy overflow when l is understated
    klp.layering = Layering{{{0, 1, 2}}};
    klp.l = 1;
    CHECK_THROWS_AS(embed_in_product(g, klp), InvalidInput);
}

TEST_CASE("embedding round trip and random partitions")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_connected(10 + rng() % 30, rng() % 15, 4, rng);
        auto klp = fixture::random_partition(g, bfs_layering(g, 0), 2 + rng() % 10, rng);
        auto emb = embed_in_product(g, klp);
        CHECK(emb.ok());
        auto back = partition_from_embedding(klp.hp.host, emb);
        CHECK(back.parts == klp.hp.parts);
        // positions are injective into H x P x K_l
        std::set<std::tuple<Vertex, std::size_t, std::size_t>> seen;
        for (const auto& p : emb.position) {
            CHECK(p.copy < klp.l);
            CHECK(seen.insert({p.host, p.layer, p.copy}).second);
        }
    }
}

TEST_CASE("make_width_one examples")
{
    auto g = gen_grid(3, 3);
    auto klp = fixture::singleton_partition(g, bfs_layering(g, 0));
    auto w1 = make_width_one(g, klp);
    CHECK(w1.hp.host == klp.hp.host);
    CHECK(w1.hp.parts == klp.hp.parts);
    CHECK(w1.l == 1);

    Graph two(2);
    KLPartition pair{HPartition{Graph(1), {{0, 1}}}, Layering{{{0, 1}}}, TreeDecomposition{Graph(1), {{0}}}, 0, 2};
    auto r = make_width_one(two, pair);
    CHECK(r.hp.host.n() == 2);
    CHECK(width(r.witness) <= 1);
    CHECK(validate_kl_partition(two, r).ok());

    auto lying = pair;
    lying.l = 1;
    CHECK_THROWS_AS(make_width_one(two, lying), InvalidInput);
}

TEST_CASE("make_width_one on random partitions")
{
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_connected(8 + rng() % 30, rng() % 15, 4, rng);
        auto klp = fixture::random_partition(g, bfs_layering(g, 0), 1 + rng() % 8, rng);
        auto r = make_width_one(g, klp);
        CHECK(validate_h_partition(g, r.hp).ok());
        CHECK(partition_layered_width(g, r.hp, r.layering) == 1);
        CHECK(width(r.witness) <= static_cast<int>((klp.k + 1) * klp.l) - 1);
        CHECK(oracle::decomposition_ok(r.hp.host, r.witness.tree, r.witness.bags));
        CHECK(embed_in_product(g, r).ok());
    }
}

TEST_CASE("friendliness_check")
{
    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    auto l = Layering{{{0}, {1, 2}}};
    auto klp = fixture::singleton_partition(tri, l);
    CHECK(friendliness_check(tri, klp, {}, {}, {}, {}).friendly);
    CHECK(friendliness_check(tri, klp, {0}, {0}, {}, {{0}}).friendly);
    auto not_layer0 = friendliness_check(tri, klp, {1}, {1}, {}, {{1}});
    CHECK_FALSE(not_layer0.friendly);

    CHECK(friendliness_check(tri, klp, {0, 1, 2}, {0}, {1, 2}, {{0}, {1}, {2}}).friendly);
    auto wrong = friendliness_check(tri, klp, {0, 1, 2}, {0, 1}, {2}, {{0}, {1}, {2}});
    CHECK_FALSE(wrong.friendly);
    REQUIRE_FALSE(wrong.reasons.empty());
    CHECK(wrong.reasons[0].find("vertex 1") != std::string::npos);

    auto merged = friendliness_check(tri, klp, {0, 1, 2}, {0}, {1, 2}, {{0}, {1, 2}});
    CHECK_FALSE(merged.friendly);

    CHECK_THROWS_AS(friendliness_check(oracle::path(3), klp, {0, 1, 2}, {0}, {1, 2}, {{0}, {1}, {2}}),
                    InvalidInput);
    CHECK_THROWS_AS(friendliness_check(tri, klp, {0, 1}, {0}, {}, {{0}, {1}}), InvalidInput);
    CHECK_THROWS_AS(friendliness_check(tri, klp, {0, 1}, {0}, {1}, {{0}}), InvalidInput);
    CHECK_THROWS_AS(friendliness_check(tri, klp, {0, 1}, {0, 1}, {1}, {{0}, {1}}), InvalidInput);
}

}
