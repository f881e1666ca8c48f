#include "clustered/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

void normalize(VertexSet& s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

VertexSet make_set(std::vector<Vertex> ids)
{
    normalize(ids);
    return ids;
}

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n)
{
    for (auto [u, v] : edges) {
        if (!valid_vertex(u) || !valid_vertex(v))
            throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has an endpoint outside 0.." + std::to_string(n) + "-1");
        if (u == v)
            throw InvalidInput("loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    m_ = 0;
    for (auto& nb : adj_) {
        normalize(nb);
        m_ += nb.size();
    }
    m_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (!valid_vertex(u) || !valid_vertex(v))
        return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (static_cast<Vertex>(u) < v)
                out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

bool Graph::validate() const
{
    std::size_t half = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        const auto& nb = adj_[u];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            Vertex v = nb[i];
            if (!valid_vertex(v) || v == static_cast<Vertex>(u))
                return false;
            if (i > 0 && nb[i - 1] >= v)
                return false;
            if (!has_edge(v, static_cast<Vertex>(u)))
                return false;
        }
        half += nb.size();
    }
    return half == 2 * m_;
}

std::size_t max_degree(const Graph& g)
{
    std::size_t d = 0;
    for (std::size_t v = 0; v < g.n(); ++v)
        d = std::max(d, g.degree(static_cast<Vertex>(v)));
    return d;
}

std::vector<int> component_labels(const Graph& g)
{
    std::vector<int> label(g.n(), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (label[s] >= 0)
            continue;
        label[s] = next;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(v))
                if (label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    auto label = component_labels(g);
    int count = 0;
    for (int l : label)
        count = std::max(count, l + 1);
    std::vector<VertexSet> comps(static_cast<std::size_t>(count));
    for (std::size_t v = 0; v < g.n(); ++v)
        comps[static_cast<std::size_t>(label[v])].push_back(static_cast<Vertex>(v));
    return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<Vertex> local(g.n(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Vertex v = s[i];
        if (!g.valid_vertex(v))
            throw InvalidInput("induced_subgraph: invalid vertex id " + std::to_string(v));
        if (local[static_cast<std::size_t>(v)] >= 0)
            throw InvalidInput("induced_subgraph: duplicate vertex id " + std::to_string(v));
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbours(s[i])) {
            Vertex j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i))
                edges.emplace_back(static_cast<Vertex>(i), j);
        }
    return {Graph(s.size(), edges), std::vector<Vertex>(s.begin(), s.end())};
}

namespace {

bool induces_connected(const Graph& g, const VertexSet& group, const std::vector<int>& owner, int id)
{
    if (group.empty())
        return false;
    std::vector<Vertex> stack{group.front()};
    std::vector<char> seen(g.n(), 0);
    seen[static_cast<std::size_t>(group.front())] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(v)) {
            auto wi = static_cast<std::size_t>(w);
            if (!seen[wi] && owner[wi] == id) {
                seen[wi] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == group.size();
}

} // namespace

std::pair<Graph, ContractionMap> contract_components(const Graph& g, const std::vector<VertexSet>& groups)
{
    std::vector<int> owner(g.n(), -1);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (Vertex v : groups[gi]) {
            if (!g.valid_vertex(v))
                throw InvalidInput("contract_components: invalid vertex id " + std::to_string(v));
            if (owner[static_cast<std::size_t>(v)] >= 0)
                throw InvalidInput("contract_components: vertex " + std::to_string(v) +
                                   " lies in more than one group");
            owner[static_cast<std::size_t>(v)] = static_cast<int>(gi);
        }
    }
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        if (!induces_connected(g, groups[gi], owner, static_cast<int>(gi)))
            throw InvalidInput("contract_components: group " + std::to_string(gi) +
                               " does not induce a connected subgraph");

    ContractionMap map;
    map.image.assign(g.n(), -1);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        map.groups.push_back(make_set(groups[gi]));
        for (Vertex v : groups[gi])
            map.image[static_cast<std::size_t>(v)] = static_cast<Vertex>(gi);
    }
    for (std::size_t v = 0; v < g.n(); ++v)
        if (owner[v] < 0) {
            map.image[v] = static_cast<Vertex>(map.groups.size());
            map.groups.push_back({static_cast<Vertex>(v)});
        }

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex a = map.image[static_cast<std::size_t>(u)];
        Vertex b = map.image[static_cast<std::size_t>(v)];
        if (a != b)
            edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return {Graph(map.groups.size(), edges), std::move(map)};
}

Graph quotient(const Graph& g, const std::vector<VertexSet>& parts)
{
    std::vector<int> owner(g.n(), -1);
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        if (parts[pi].empty())
            throw InvalidInput("quotient: part " + std::to_string(pi) + " is empty");
        for (Vertex v : parts[pi]) {
            if (!g.valid_vertex(v))
                throw InvalidInput("quotient: invalid vertex id " + std::to_string(v));
            if (owner[static_cast<std::size_t>(v)] >= 0)
                throw InvalidInput("quotient: vertex " + std::to_string(v) + " lies in two parts");
            owner[static_cast<std::size_t>(v)] = static_cast<int>(pi);
        }
    }
    for (std::size_t v = 0; v < g.n(); ++v)
        if (owner[v] < 0)
            throw InvalidInput("quotient: vertex " + std::to_string(v) + " is in no part");

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = owner[static_cast<std::size_t>(u)];
        int b = owner[static_cast<std::size_t>(v)];
        if (a != b)
            edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph(parts.size(), edges);
}

Graph strong_product(const Graph& a, const Graph& b, std::size_t vertex_limit)
{
    const std::size_t na = a.n(), nb = b.n();
    if (nb != 0 && na > vertex_limit / nb)
        throw TooLarge("strong_product: " + std::to_string(na) + " x " + std::to_string(nb) +
                       " vertices exceeds the limit of " + std::to_string(vertex_limit));
    if (na * nb > vertex_limit)
        throw TooLarge("strong_product: result exceeds the limit of " + std::to_string(vertex_limit));

    auto id = [nb](std::size_t v, std::size_t x) { return static_cast<Vertex>(v * nb + x); };
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < na; ++v) {
        // closed neighbourhoods in each factor, cartesian product minus (v, x) itself
        std::vector<Vertex> nv(a.neighbours(static_cast<Vertex>(v)).begin(),
                               a.neighbours(static_cast<Vertex>(v)).end());
        nv.push_back(static_cast<Vertex>(v));
        for (std::size_t x = 0; x < nb; ++x) {
            std::vector<Vertex> nx(b.neighbours(static_cast<Vertex>(x)).begin(),
                                   b.neighbours(static_cast<Vertex>(x)).end());
            nx.push_back(static_cast<Vertex>(x));
            for (Vertex w : nv)
                for (Vertex y : nx) {
                    Vertex s = id(v, x), t = id(static_cast<std::size_t>(w), static_cast<std::size_t>(y));
                    if (s < t)
                        edges.emplace_back(s, t);
                }
        }
    }
    return Graph(na * nb, edges);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth)
{
    std::vector<int> dist(g.n(), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        int d = dist[static_cast<std::size_t>(v)];
        if (max_depth >= 0 && d >= max_depth)
            continue;
        for (Vertex w : g.neighbours(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = d + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

Graph graph_power(const Graph& g, std::size_t p)
{
    if (p == 0)
        throw InvalidInput("graph_power: p must be at least 1");
    if (p == 1)
        return g;
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < g.n(); ++v) {
        auto dist = bfs_distances(g, static_cast<Vertex>(v), static_cast<int>(p));
        for (std::size_t w = v + 1; w < g.n(); ++w)
            if (dist[w] > 0)
                edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
    return Graph(g.n(), edges);
}

} // namespace clustered
