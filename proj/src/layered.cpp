#include "clustered/layered.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

namespace {

// max over sets of the largest number of members sharing a layer
std::size_t max_layer_overlap(const std::vector<VertexSet>& sets, const std::vector<int>& layer_of)
{
    std::size_t best = 0;
    std::map<int, std::size_t> count;
    for (const auto& s : sets) {
        count.clear();
        for (Vertex v : s)
            best = std::max(best, ++count[layer_of[static_cast<std::size_t>(v)]]);
    }
    return best;
}

void require(const ValidationReport& rep, const std::string& what)
{
    if (!rep)
        throw InvalidInput(what + ": " + rep.summary());
}

ValidationReport structural_only(ValidationReport rep)
{
    std::erase_if(rep.violations, [](const Violation& v) { return v.kind == Violation::Kind::Edge; });
    return rep;
}

} // namespace

std::size_t layered_width_of_decomposition(const Graph& g, const TreeDecomposition& td, const Layering& l)
{
    require(validate_tree_decomposition(g, td), "layered width: invalid decomposition");
    require(validate_layering(g, l), "layered width: invalid layering");
    return max_layer_overlap(td.bags, l.index_of(g.n()));
}

ValidationReport validate_h_partition(const Graph& g, const HPartition& hp)
{
    ValidationReport rep;
    if (hp.parts.size() != hp.host.n()) {
        rep.violations.push_back({Violation::Kind::Structure, -1, -1,
                                  std::to_string(hp.parts.size()) + " parts for a host of " +
                                      std::to_string(hp.host.n()) + " vertices"});
        return rep;
    }
    std::vector<int> owner(g.n(), -1);
    for (std::size_t x = 0; x < hp.parts.size(); ++x) {
        if (hp.parts[x].empty())
            rep.violations.push_back({Violation::Kind::Structure, static_cast<Vertex>(x), -1,
                                      "part of host vertex " + std::to_string(x) + " is empty"});
        for (Vertex v : hp.parts[x]) {
            if (!g.valid_vertex(v)) {
                rep.violations.push_back({Violation::Kind::InvalidId, v, -1,
                                          "part " + std::to_string(x) + " holds invalid id " + std::to_string(v)});
                continue;
            }
            auto& o = owner[static_cast<std::size_t>(v)];
            if (o >= 0)
                rep.violations.push_back({Violation::Kind::Duplicate, v, -1,
                                          "vertex " + std::to_string(v) + " in parts " + std::to_string(o) + " and " +
                                              std::to_string(x)});
            else
                o = static_cast<int>(x);
        }
    }
    for (std::size_t v = 0; v < g.n(); ++v)
        if (owner[v] < 0)
            rep.violations.push_back({Violation::Kind::Missing, static_cast<Vertex>(v), -1,
                                      "vertex " + std::to_string(v) + " is in no part"});
    for (auto [u, v] : g.edges()) {
        int x = owner[static_cast<std::size_t>(u)], y = owner[static_cast<std::size_t>(v)];
        if (x < 0 || y < 0 || x == y || hp.host.has_edge(x, y))
            continue;
        rep.violations.push_back({Violation::Kind::Edge, u, v,
                                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins parts " +
                                      std::to_string(x) + " and " + std::to_string(y) +
                                      " which are not adjacent in the host"});
    }
    return rep;
}

std::size_t partition_layered_width(const Graph& g, const HPartition& hp, const Layering& l)
{
    require(validate_layering(g, l), "partition layered width: invalid layering");
    return max_layer_overlap(hp.parts, l.index_of(g.n()));
}

ValidationReport validate_kl_partition(const Graph& g, const KLPartition& klp)
{
    ValidationReport rep = validate_h_partition(g, klp.hp);
    auto add = [&](const ValidationReport& r, const std::string& prefix) {
        for (auto viol : r.violations) {
            viol.message = prefix + viol.message;
            rep.violations.push_back(std::move(viol));
        }
    };
    auto lrep = validate_layering(g, klp.layering);
    add(lrep, "layering: ");
    try {
        add(validate_tree_decomposition(klp.hp.host, klp.witness), "witness: ");
    } catch (const InvalidInput& e) {
        rep.violations.push_back({Violation::Kind::Structure, -1, -1, std::string("witness: ") + e.what()});
    }
    if (width(klp.witness) > static_cast<int>(klp.k))
        rep.violations.push_back({Violation::Kind::Structure, -1, -1,
                                  "witness width " + std::to_string(width(klp.witness)) + " exceeds k = " +
                                      std::to_string(klp.k)});
    if (rep.ok()) {
        auto lw = max_layer_overlap(klp.hp.parts, klp.layering.index_of(g.n()));
        if (lw > klp.l)
            rep.violations.push_back({Violation::Kind::Structure, -1, -1,
                                      "layered width " + std::to_string(lw) + " exceeds l = " +
                                          std::to_string(klp.l)});
    }
    return rep;
}

LayeredTreeDecomposition layered_td_from_partition(const Graph& g, const KLPartition& klp)
{
    require(validate_kl_partition(g, klp), "layered_td_from_partition: invalid partition");
    LayeredTreeDecomposition out;
    out.td.tree = klp.witness.tree;
    for (const auto& hbag : klp.witness.bags) {
        VertexSet bag;
        for (Vertex x : hbag) {
            const auto& part = klp.hp.parts[static_cast<std::size_t>(x)];
            bag.insert(bag.end(), part.begin(), part.end());
        }
        normalize(bag);
        out.td.bags.push_back(std::move(bag));
    }
    out.layering = klp.layering;
    out.layered_width = layered_width_of_decomposition(g, out.td, out.layering);
    return out;
}

PowerDecomposition power_layered_decomposition(const Graph& g, const TreeDecomposition& td, const Layering& l,
                                               std::size_t p)
{
    if (p == 0)
        throw InvalidInput("power_layered_decomposition: p must be at least 1");
    PowerDecomposition out;
    out.k = layered_width_of_decomposition(g, td, l);
    out.delta = max_degree(g);
    out.power = graph_power(g, p);

    const int radius = static_cast<int>(p / 2);
    std::vector<VertexSet> ball(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) {
        auto dist = bfs_distances(g, static_cast<Vertex>(v), radius);
        for (std::size_t w = 0; w < g.n(); ++w)
            if (dist[w] >= 0)
                ball[v].push_back(static_cast<Vertex>(w));
    }
    out.ltd.td.tree = td.tree;
    for (const auto& bag : td.bags) {
        VertexSet grown;
        for (Vertex v : bag)
            grown.insert(grown.end(), ball[static_cast<std::size_t>(v)].begin(), ball[static_cast<std::size_t>(v)].end());
        normalize(grown);
        out.ltd.td.bags.push_back(std::move(grown));
    }
    out.ltd.layering = coarsen_layering(l, p);
    require(validate_tree_decomposition(out.power, out.ltd.td), "power_layered_decomposition: decomposition");
    require(validate_layering(out.power, out.ltd.layering), "power_layered_decomposition: layering");
    out.ltd.layered_width = max_layer_overlap(out.ltd.td.bags, out.ltd.layering.index_of(g.n()));

    if (g.n() == 0) {
        out.strict = false;
        out.bound = 0;
    } else if (out.delta >= 2) {
        std::size_t pw = 1;
        for (int i = 0; i < radius; ++i)
            pw *= out.delta;
        out.bound = 2 * p * out.k * pw;
        out.strict = true;
    } else {
        // a matching: every ball has at most two vertices
        out.bound = 2 * p * out.k;
        out.strict = false;
    }
    return out;
}

std::vector<Vertex> rest_vertices(const Graph& g, const VertexSet& a)
{
    std::vector<char> apex(g.n(), 0);
    for (Vertex v : a) {
        if (!g.valid_vertex(v))
            throw InvalidInput("apex id " + std::to_string(v) + " is not a vertex");
        apex[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> rest;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (!apex[v])
            rest.push_back(static_cast<Vertex>(v));
    return rest;
}

DropApicesResult drop_apices(const Graph& g, const VertexSet& a_in, const KLPartition& klp_of_rest)
{
    const VertexSet a = make_set(a_in);
    const auto rest = rest_vertices(g, a);
    const auto sub = induced_subgraph(g, rest);
    require(validate_kl_partition(sub.graph, klp_of_rest), "drop_apices: invalid partition of g - a");

    DropApicesResult out;
    if (a.empty()) {
        out.klp = klp_of_rest;
        out.width_bound = klp_of_rest.l;
        return out;
    }

    std::vector<Vertex> local(g.n(), -1);
    for (std::size_t i = 0; i < rest.size(); ++i)
        local[static_cast<std::size_t>(rest[i])] = static_cast<Vertex>(i);
    const auto layer_of = klp_of_rest.layering.index_of(rest.size());
    std::size_t apex_degree = 0;
    for (Vertex v : a) {
        apex_degree = std::max(apex_degree, g.degree(v));
        for (Vertex w : g.neighbours(v))
            if (Vertex lw = local[static_cast<std::size_t>(w)]; lw >= 0)
                out.hit_layers.push_back(static_cast<std::size_t>(layer_of[static_cast<std::size_t>(lw)]));
    }
    std::sort(out.hit_layers.begin(), out.hit_layers.end());
    out.hit_layers.erase(std::unique(out.hit_layers.begin(), out.hit_layers.end()), out.hit_layers.end());
    out.apex_degree = std::max<std::size_t>(1, apex_degree);
    out.width_bound = 2 * klp_of_rest.l * out.apex_degree * a.size();

    // apexes without neighbours in g - a: any centre works, take layer 0
    std::vector<std::size_t> centres = out.hit_layers;
    if (centres.empty() && klp_of_rest.layering.size() > 0)
        centres.push_back(0);

    Layering collapsed;
    if (!centres.empty())
        collapsed = distance_collapse(klp_of_rest.layering, centres).layering;
    KLPartition& q = out.klp;
    for (const auto& w : collapsed.layers) {
        VertexSet layer;
        for (Vertex v : w)
            layer.push_back(rest[static_cast<std::size_t>(v)]);
        q.layering.layers.push_back(std::move(layer));
    }
    if (q.layering.layers.empty())
        q.layering.layers.emplace_back();
    q.layering.layers[0].insert(q.layering.layers[0].end(), a.begin(), a.end());
    normalize(q.layering.layers[0]);

    const auto host_n = klp_of_rest.hp.host.n();
    const auto apex_node = static_cast<Vertex>(host_n);
    for (const auto& part : klp_of_rest.hp.parts) {
        VertexSet mapped;
        for (Vertex v : part)
            mapped.push_back(rest[static_cast<std::size_t>(v)]);
        q.hp.parts.push_back(std::move(mapped));
    }
    q.hp.parts.push_back(a);
    auto host_edges = klp_of_rest.hp.host.edges();
    for (std::size_t x = 0; x < host_n; ++x)
        host_edges.emplace_back(static_cast<Vertex>(x), apex_node);
    q.hp.host = Graph(host_n + 1, host_edges);

    q.witness.tree = klp_of_rest.witness.tree;
    q.witness.bags = klp_of_rest.witness.bags;
    if (q.witness.bags.empty()) {
        q.witness.tree = Graph(1);
        q.witness.bags.emplace_back();
    }
    for (auto& bag : q.witness.bags) {
        bag.push_back(apex_node);
        normalize(bag);
    }
    q.k = klp_of_rest.k + 1;
    q.l = out.width_bound;
    require(validate_kl_partition(g, q), "drop_apices: result");
    return out;
}

ProductEmbedding embed_in_product(const Graph& g, const KLPartition& klp)
{
    // edge breaches are reported per edge below; anything else is malformed input
    require(structural_only(validate_h_partition(g, klp.hp)), "embed_in_product: invalid H-partition");
    require(structural_only(validate_layering(g, klp.layering)), "embed_in_product: invalid layering");
    const auto layer_of = klp.layering.index_of(g.n());
    ProductEmbedding emb;
    emb.position.resize(g.n());
    for (std::size_t x = 0; x < klp.hp.parts.size(); ++x) {
        std::map<int, std::size_t> used;
        for (Vertex v : klp.hp.parts[x]) {   // ascending ids
            auto vi = static_cast<std::size_t>(v);
            std::size_t copy = used[layer_of[vi]]++;
            if (copy >= klp.l)
                throw InvalidInput("embed_in_product: part " + std::to_string(x) + " has more than l = " +
                                   std::to_string(klp.l) + " vertices in layer " + std::to_string(layer_of[vi]));
            emb.position[vi] = {static_cast<Vertex>(x), static_cast<std::size_t>(layer_of[vi]), copy};
        }
    }
    for (auto [u, v] : g.edges()) {
        const auto& p = emb.position[static_cast<std::size_t>(u)];
        const auto& q = emb.position[static_cast<std::size_t>(v)];
        bool host_ok = p.host == q.host || klp.hp.host.has_edge(p.host, q.host);
        bool path_ok = (p.layer > q.layer ? p.layer - q.layer : q.layer - p.layer) <= 1;
        bool distinct = p.host != q.host || p.layer != q.layer || p.copy != q.copy;
        if (!(host_ok && path_ok && distinct))
            emb.failing_edges.emplace_back(u, v);
    }
    return emb;
}

HPartition partition_from_embedding(const Graph& host, const ProductEmbedding& emb)
{
    HPartition hp{host, std::vector<VertexSet>(host.n())};
    for (std::size_t v = 0; v < emb.position.size(); ++v)
        hp.parts[static_cast<std::size_t>(emb.position[v].host)].push_back(static_cast<Vertex>(v));
    return hp;
}

KLPartition make_width_one(const Graph& g, const KLPartition& klp)
{
    require(validate_kl_partition(g, klp), "make_width_one: invalid partition");
    auto emb = embed_in_product(g, klp);

    // used (host vertex, copy) pairs, numbered lexicographically
    const std::size_t host_n = klp.hp.host.n();
    std::vector<std::vector<Vertex>> copies_of(host_n);   // copy index -> new id, -1 if unused
    for (std::size_t x = 0; x < host_n; ++x)
        copies_of[x].assign(klp.l, -1);
    for (const auto& pos : emb.position)
        copies_of[static_cast<std::size_t>(pos.host)][pos.copy] = 0;
    std::vector<std::vector<Vertex>> used(host_n);
    Vertex next = 0;
    for (std::size_t x = 0; x < host_n; ++x)
        for (std::size_t c = 0; c < klp.l; ++c)
            if (copies_of[x][c] == 0) {
                copies_of[x][c] = next++;
                used[x].push_back(copies_of[x][c]);
            }

    KLPartition out;
    out.hp.parts.resize(static_cast<std::size_t>(next));
    for (std::size_t v = 0; v < g.n(); ++v) {
        const auto& pos = emb.position[v];
        out.hp.parts[static_cast<std::size_t>(copies_of[static_cast<std::size_t>(pos.host)][pos.copy])].push_back(
            static_cast<Vertex>(v));
    }
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < host_n; ++x) {
        for (std::size_t i = 0; i < used[x].size(); ++i)
            for (std::size_t j = i + 1; j < used[x].size(); ++j)
                edges.emplace_back(used[x][i], used[x][j]);
        for (Vertex y : klp.hp.host.neighbours(static_cast<Vertex>(x)))
            if (static_cast<std::size_t>(y) > x)
                for (Vertex s : used[x])
                    for (Vertex t : used[static_cast<std::size_t>(y)])
                        edges.emplace_back(std::min(s, t), std::max(s, t));
    }
    out.hp.host = Graph(static_cast<std::size_t>(next), edges);
    out.witness.tree = klp.witness.tree;
    for (const auto& bag : klp.witness.bags) {
        VertexSet nb;
        for (Vertex x : bag)
            nb.insert(nb.end(), used[static_cast<std::size_t>(x)].begin(), used[static_cast<std::size_t>(x)].end());
        normalize(nb);
        out.witness.bags.push_back(std::move(nb));
    }
    out.layering = klp.layering;
    out.k = (klp.k + 1) * klp.l - 1;
    out.l = 1;
    require(validate_kl_partition(g, out), "make_width_one: result");
    return out;
}

FriendlinessReport friendliness_check(const Graph& g, const KLPartition& klp, const VertexSet& clique_in,
                                      const VertexSet& c0_in, const VertexSet& c1_in,
                                      const std::vector<VertexSet>& prescribed_parts)
{
    const VertexSet clique = make_set(clique_in), c0 = make_set(c0_in), c1 = make_set(c1_in);
    for (Vertex v : clique)
        if (!g.valid_vertex(v))
            throw InvalidInput("friendliness: clique vertex " + std::to_string(v) + " is not a vertex");
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(clique[i], clique[j]))
                throw InvalidInput("friendliness: " + std::to_string(clique[i]) + " and " + std::to_string(clique[j]) +
                                   " are not adjacent, so the set is not a clique");
    VertexSet joined;
    std::set_union(c0.begin(), c0.end(), c1.begin(), c1.end(), std::back_inserter(joined));
    if (joined != clique || c0.size() + c1.size() != clique.size())
        throw InvalidInput("friendliness: {c0, c1} is not a partition of the clique");
    VertexSet covered;
    std::size_t total = 0;
    for (const auto& p : prescribed_parts) {
        total += p.size();
        covered.insert(covered.end(), p.begin(), p.end());
    }
    normalize(covered);
    if (covered != clique || total != clique.size())
        throw InvalidInput("friendliness: prescribed parts do not partition the clique");
    for (const auto& p : prescribed_parts)
        if (p.empty())
            throw InvalidInput("friendliness: prescribed parts must be non-empty");

    FriendlinessReport rep;
    auto kl = validate_kl_partition(g, klp);
    if (!kl)
        rep.reasons.push_back("not a valid (k,l)-partition: " + kl.summary());
    std::vector<VertexSet> own;
    for (const auto& p : klp.hp.parts)
        own.push_back(make_set(p));
    std::sort(own.begin(), own.end());
    for (const auto& p : prescribed_parts)
        if (!std::binary_search(own.begin(), own.end(), make_set(p))) {
            std::string ids;
            for (Vertex v : make_set(p))
                ids += (ids.empty() ? "" : ",") + std::to_string(v);
            rep.reasons.push_back("prescribed part {" + ids + "} is not a part of the partition");
        }
    const auto layer_of = klp.layering.index_of(g.n());
    for (Vertex v : c0)
        if (layer_of[static_cast<std::size_t>(v)] != 0)
            rep.reasons.push_back("vertex " + std::to_string(v) + " of C_0 is in layer " +
                                  std::to_string(layer_of[static_cast<std::size_t>(v)]) + ", not 0");
    for (Vertex v : c1)
        if (layer_of[static_cast<std::size_t>(v)] != 1)
            rep.reasons.push_back("vertex " + std::to_string(v) + " of C_1 is in layer " +
                                  std::to_string(layer_of[static_cast<std::size_t>(v)]) + ", not 1");
    rep.friendly = rep.reasons.empty();
    return rep;
}

} // namespace clustered
