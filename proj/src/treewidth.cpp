#include "clustered/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "clustered/error.hpp"

namespace clustered {

bool is_tree(const Graph& t)
{
    if (t.n() == 0)
        return true;
    return t.m() == t.n() - 1 && connected_components(t).size() == 1;
}

int width(const TreeDecomposition& td)
{
    std::size_t best = 0;
    for (const auto& b : td.bags)
        best = std::max(best, b.size());
    return td.bags.empty() ? -1 : static_cast<int>(best) - 1;
}

std::size_t width(const TreePartition& tp)
{
    std::size_t best = 0;
    for (const auto& p : tp.parts)
        best = std::max(best, p.size());
    return best;
}

namespace {

// Nodes of the tree holding each vertex; empty vector for vertices in no bag.
std::vector<std::vector<Vertex>> occurrences(std::size_t n, const std::vector<VertexSet>& bags,
                                             ValidationReport* rep)
{
    std::vector<std::vector<Vertex>> occ(n);
    for (std::size_t x = 0; x < bags.size(); ++x)
        for (Vertex v : bags[x]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                if (rep)
                    rep->violations.push_back({Violation::Kind::InvalidId, v, -1,
                                               "node " + std::to_string(x) + " holds invalid id " +
                                                   std::to_string(v)});
                continue;
            }
            occ[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(x));
        }
    return occ;
}

bool subtree_connected(const Graph& tree, const std::vector<Vertex>& nodes, std::vector<int>& mark, int stamp)
{
    for (Vertex x : nodes)
        mark[static_cast<std::size_t>(x)] = stamp;
    std::vector<Vertex> stack{nodes.front()};
    mark[static_cast<std::size_t>(nodes.front())] = -stamp;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : tree.neighbours(x))
            if (mark[static_cast<std::size_t>(y)] == stamp) {
                mark[static_cast<std::size_t>(y)] = -stamp;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == nodes.size();
}

bool sorted_intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

} // namespace

ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td)
{
    if (!is_tree(td.tree))
        throw InvalidInput("tree decomposition: the tree field is not a tree");
    if (td.bags.size() != td.tree.n())
        throw InvalidInput("tree decomposition: " + std::to_string(td.bags.size()) + " bags for " +
                           std::to_string(td.tree.n()) + " tree nodes");
    ValidationReport rep;
    auto occ = occurrences(g.n(), td.bags, &rep);
    std::vector<int> mark(td.tree.n(), 0);
    int stamp = 0;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (occ[v].empty()) {
            rep.violations.push_back({Violation::Kind::Missing, static_cast<Vertex>(v), -1,
                                      "vertex " + std::to_string(v) + " is in no bag"});
            continue;
        }
        if (!subtree_connected(td.tree, occ[v], mark, ++stamp))
            rep.violations.push_back({Violation::Kind::Structure, static_cast<Vertex>(v), -1,
                                      "bags containing vertex " + std::to_string(v) +
                                          " do not form a connected subtree"});
    }
    for (auto [u, v] : g.edges())
        if (!sorted_intersect(occ[static_cast<std::size_t>(u)], occ[static_cast<std::size_t>(v)]))
            rep.violations.push_back({Violation::Kind::Edge, u, v,
                                      "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") is not covered by any bag"});
    return rep;
}

ValidationReport validate_tree_partition(const Graph& g, const TreePartition& tp)
{
    if (!is_tree(tp.tree))
        throw InvalidInput("tree partition: the tree field is not a tree");
    if (tp.parts.size() != tp.tree.n())
        throw InvalidInput("tree partition: " + std::to_string(tp.parts.size()) + " parts for " +
                           std::to_string(tp.tree.n()) + " tree nodes");
    ValidationReport rep;
    auto occ = occurrences(g.n(), tp.parts, &rep);
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (occ[v].empty())
            rep.violations.push_back({Violation::Kind::Missing, static_cast<Vertex>(v), -1,
                                      "vertex " + std::to_string(v) + " is in no part"});
        else if (occ[v].size() > 1)
            rep.violations.push_back({Violation::Kind::Duplicate, static_cast<Vertex>(v), -1,
                                      "vertex " + std::to_string(v) + " is in " + std::to_string(occ[v].size()) +
                                          " parts"});
    }
    for (auto [u, v] : g.edges()) {
        const auto& a = occ[static_cast<std::size_t>(u)];
        const auto& b = occ[static_cast<std::size_t>(v)];
        if (a.empty() || b.empty())
            continue;
        if (a.front() != b.front() && !tp.tree.has_edge(a.front(), b.front()))
            rep.violations.push_back({Violation::Kind::Edge, u, v,
                                      "edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins parts " +
                                          std::to_string(a.front()) + " and " + std::to_string(b.front()) +
                                          " which are not adjacent in the tree"});
    }
    return rep;
}

namespace {

// Links tree components (given as node lists) by a chain through their first nodes.
void link_forest(std::size_t nodes, std::vector<Edge>& edges)
{
    Graph forest(nodes, edges);
    auto comps = connected_components(forest);
    for (std::size_t i = 1; i < comps.size(); ++i)
        edges.emplace_back(comps[i - 1].front(), comps[i].front());
}

} // namespace

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order)
{
    const std::size_t n = g.n();
    if (order.size() != n)
        throw InvalidInput("elimination ordering must list every vertex exactly once");
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = order[i];
        if (!g.valid_vertex(v) || pos[static_cast<std::size_t>(v)] >= 0)
            throw InvalidInput("elimination ordering must list every vertex exactly once");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }

    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<Edge> tree_edges;
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = order[i];
        auto& nb = adj[static_cast<std::size_t>(v)];
        VertexSet bag(nb.begin(), nb.end());
        bag.push_back(v);
        normalize(bag);
        td.bags[i] = bag;
        Vertex parent = -1;
        for (Vertex w : nb)
            if (parent < 0 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(parent)])
                parent = w;
        for (Vertex a : nb) {
            adj[static_cast<std::size_t>(a)].erase(v);
            for (Vertex b : nb)
                if (a != b)
                    adj[static_cast<std::size_t>(a)].insert(b);
        }
        if (parent >= 0)
            tree_edges.emplace_back(static_cast<Vertex>(i), pos[static_cast<std::size_t>(parent)]);
    }
    link_forest(n, tree_edges);
    td.tree = Graph(n, tree_edges);
    return td;
}

TreeDecomposition compress(TreeDecomposition td)
{
    const std::size_t n = td.bags.size();
    std::vector<std::set<Vertex>> tadj(n);
    for (auto [x, y] : td.tree.edges()) {
        tadj[static_cast<std::size_t>(x)].insert(y);
        tadj[static_cast<std::size_t>(y)].insert(x);
    }
    std::vector<char> alive(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (!alive[x])
                continue;
            for (Vertex y : tadj[x]) {
                const auto& bx = td.bags[x];
                const auto& by = td.bags[static_cast<std::size_t>(y)];
                if (!std::includes(by.begin(), by.end(), bx.begin(), bx.end()))
                    continue;
                // fold x into y
                for (Vertex z : tadj[x])
                    if (z != y) {
                        tadj[static_cast<std::size_t>(z)].erase(static_cast<Vertex>(x));
                        tadj[static_cast<std::size_t>(z)].insert(y);
                        tadj[static_cast<std::size_t>(y)].insert(z);
                    }
                tadj[static_cast<std::size_t>(y)].erase(static_cast<Vertex>(x));
                tadj[x].clear();
                alive[x] = 0;
                changed = true;
                break;
            }
        }
    }
    std::vector<Vertex> id(n, -1);
    TreeDecomposition out;
    for (std::size_t x = 0; x < n; ++x)
        if (alive[x]) {
            id[x] = static_cast<Vertex>(out.bags.size());
            out.bags.push_back(td.bags[x]);
        }
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < n; ++x)
        if (alive[x])
            for (Vertex y : tadj[x])
                if (static_cast<Vertex>(x) < y)
                    edges.emplace_back(id[x], id[static_cast<std::size_t>(y)]);
    out.tree = Graph(out.bags.size(), edges);
    return out;
}

TreeDecomposition heuristic_tree_decomposition(const Graph& g, EliminationStrategy strategy)
{
    const std::size_t n = g.n();
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    auto fill_in = [&](Vertex v) {
        const auto& nb = adj[static_cast<std::size_t>(v)];
        std::size_t missing = 0;
        for (auto a = nb.begin(); a != nb.end(); ++a)
            for (auto b = std::next(a); b != nb.end(); ++b)
                if (!adj[static_cast<std::size_t>(*a)].count(*b))
                    ++missing;
        return missing;
    };
    auto key = [&](Vertex v) {
        return strategy == EliminationStrategy::MinFill ? fill_in(v) : adj[static_cast<std::size_t>(v)].size();
    };

    std::set<std::pair<std::size_t, Vertex>> queue;
    std::vector<std::size_t> current(n);
    for (std::size_t v = 0; v < n; ++v) {
        current[v] = key(static_cast<Vertex>(v));
        queue.emplace(current[v], static_cast<Vertex>(v));
    }
    std::vector<char> done(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    while (!queue.empty()) {
        Vertex v = queue.begin()->second;
        queue.erase(queue.begin());
        done[static_cast<std::size_t>(v)] = 1;
        order.push_back(v);
        std::vector<Vertex> nb(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
        for (Vertex a : nb) {
            adj[static_cast<std::size_t>(a)].erase(v);
            for (Vertex b : nb)
                if (a != b)
                    adj[static_cast<std::size_t>(a)].insert(b);
        }
        // degrees change only on N(v); fill-in also on N(N(v))
        std::set<Vertex> touched(nb.begin(), nb.end());
        if (strategy == EliminationStrategy::MinFill)
            for (Vertex a : nb)
                touched.insert(adj[static_cast<std::size_t>(a)].begin(), adj[static_cast<std::size_t>(a)].end());
        for (Vertex u : touched) {
            auto ui = static_cast<std::size_t>(u);
            if (done[ui])
                continue;
            std::size_t k = key(u);
            if (k != current[ui]) {
                queue.erase({current[ui], u});
                current[ui] = k;
                queue.emplace(k, u);
            }
        }
    }
    return compress(decomposition_from_ordering(g, order));
}

Decomposer heuristic_decomposer(EliminationStrategy strategy)
{
    return [strategy](const Graph& g) { return heuristic_tree_decomposition(g, strategy); };
}

ExactTreewidth exact_treewidth(const Graph& g, std::size_t limit)
{
    const std::size_t n = g.n();
    if (n > limit)
        throw TooLarge("exact_treewidth: " + std::to_string(n) + " vertices exceeds the limit of " +
                       std::to_string(limit));
    if (n > 24)
        throw TooLarge("exact_treewidth: subset dynamic programming supports at most 24 vertices");
    if (n == 0)
        return {-1, TreeDecomposition{}};

    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[static_cast<std::size_t>(u)] |= 1u << v;
        nbr[static_cast<std::size_t>(v)] |= 1u << u;
    }
    // |Q(S, v)|: vertices outside S + v reachable from v through S
    auto q_size = [&](std::uint32_t s, std::size_t v) {
        std::uint32_t seen = 1u << v;
        std::uint32_t frontier = 1u << v;
        std::uint32_t outside = 0;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1)
                next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
            next &= ~seen;
            seen |= next;
            outside |= next & ~s;
            frontier = next & s;
        }
        return std::popcount(outside);
    };

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<int> tw(std::size_t{1} << n, std::numeric_limits<int>::max());
    std::vector<signed char> choice(std::size_t{1} << n, -1);
    tw[0] = std::numeric_limits<int>::min();
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (std::uint32_t r = s; r; r &= r - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(r));
            std::uint32_t rest = s & ~(1u << v);
            int val = std::max(tw[rest], q_size(rest, v));
            if (val < tw[s]) {
                tw[s] = val;
                choice[s] = static_cast<signed char>(v);
            }
        }
    }
    std::vector<Vertex> order(n);
    std::uint32_t s = full;
    for (std::size_t i = n; i-- > 0;) {
        auto v = choice[s];
        order[i] = v;
        s &= ~(1u << v);
    }
    auto td = compress(decomposition_from_ordering(g, order));
    return {tw[full], std::move(td)};
}

Decomposer exact_decomposer(std::size_t limit)
{
    return [limit](const Graph& g) { return exact_treewidth(g, limit).decomposition; };
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const std::vector<Vertex>& to_parent,
                                         std::size_t parent_n)
{
    std::vector<Vertex> local(parent_n, -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        local[static_cast<std::size_t>(to_parent[i])] = static_cast<Vertex>(i);
    std::vector<Vertex> id(td.bags.size(), -1);
    TreeDecomposition out;
    for (std::size_t x = 0; x < td.bags.size(); ++x) {
        VertexSet bag;
        for (Vertex v : td.bags[x])
            if (Vertex l = local[static_cast<std::size_t>(v)]; l >= 0)
                bag.push_back(l);
        if (bag.empty())
            continue;
        normalize(bag);
        id[x] = static_cast<Vertex>(out.bags.size());
        out.bags.push_back(std::move(bag));
    }
    std::vector<Edge> edges;
    for (auto [x, y] : td.tree.edges())
        if (id[static_cast<std::size_t>(x)] >= 0 && id[static_cast<std::size_t>(y)] >= 0)
            edges.emplace_back(id[static_cast<std::size_t>(x)], id[static_cast<std::size_t>(y)]);
    link_forest(out.bags.size(), edges);
    out.tree = Graph(out.bags.size(), edges);
    return out;
}

TreeDecomposition contract_decomposition(const TreeDecomposition& td, const ContractionMap& map)
{
    TreeDecomposition out{td.tree, {}};
    out.bags.reserve(td.bags.size());
    for (const auto& bag : td.bags) {
        VertexSet b;
        for (Vertex v : bag)
            b.push_back(map.image[static_cast<std::size_t>(v)]);
        normalize(b);
        out.bags.push_back(std::move(b));
    }
    return out;
}

TreeDecomposition join_decompositions(const std::vector<TreeDecomposition>& parts,
                                      const std::vector<std::vector<Vertex>>& to_parent)
{
    TreeDecomposition out;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto offset = static_cast<Vertex>(out.bags.size());
        for (const auto& bag : parts[i].bags) {
            VertexSet b;
            for (Vertex v : bag)
                b.push_back(to_parent[i][static_cast<std::size_t>(v)]);
            normalize(b);
            out.bags.push_back(std::move(b));
        }
        for (auto [x, y] : parts[i].tree.edges())
            edges.emplace_back(x + offset, y + offset);
    }
    link_forest(out.bags.size(), edges);
    out.tree = Graph(out.bags.size(), edges);
    return out;
}

// ---------------------------------------------------------------------------
// Bounded tree-partitions

namespace {

class TreePartitionBuilder {
public:
    TreePartitionBuilder(const Graph& g, const TreeDecomposition& td, std::size_t k)
        : g_(g), td_(td), threshold_(4 * k), in_cur_(g.n(), 0), in_s_(g.n(), 0), mark_(g.n(), 0)
    {
        root_tree();
    }

    /// Builds the partition of one connected component, rooted at its smallest vertex.
    /// Returns the index of the component's root part.
    std::size_t build_component(const VertexSet& comp)
    {
        struct Job {
            VertexSet cur;
            VertexSet s;
            int parent;
        };
        std::vector<Job> jobs{{comp, {comp.front()}, -1}};
        std::size_t root = parts_.size();
        while (!jobs.empty()) {
            Job job = std::move(jobs.back());
            jobs.pop_back();
            VertexSet part;
            std::vector<std::pair<VertexSet, VertexSet>> children;
            split(job.cur, job.s, part, children);
            normalize(part);
            auto id = static_cast<int>(parts_.size());
            parts_.push_back(std::move(part));
            if (job.parent >= 0)
                tree_edges_.emplace_back(job.parent, id);
            for (auto& [cur, s] : children)
                jobs.push_back({std::move(cur), std::move(s), id});
        }
        return root;
    }

    TreePartition finish(const std::vector<std::size_t>& roots)
    {
        for (std::size_t i = 1; i < roots.size(); ++i)
            tree_edges_.emplace_back(static_cast<Vertex>(roots[i - 1]), static_cast<Vertex>(roots[i]));
        TreePartition tp;
        tp.tree = Graph(parts_.size(), tree_edges_);
        tp.parts = std::move(parts_);
        return tp;
    }

private:
    // Every component of G[cur] meets s. Appends the root part's vertices to
    // `part` and the (subgraph, root set) pairs of its child parts to `children`.
    void split(const VertexSet& cur, const VertexSet& s, VertexSet& part,
               std::vector<std::pair<VertexSet, VertexSet>>& children)
    {
        if (s.size() <= threshold_) {
            part.insert(part.end(), s.begin(), s.end());
            set_flags(in_s_, s, 1);
            VertexSet rest, next;
            set_flags(in_cur_, cur, 1);
            for (Vertex v : cur)
                if (!in_s_[static_cast<std::size_t>(v)])
                    rest.push_back(v);
            for (Vertex v : s)
                for (Vertex w : g_.neighbours(v))
                    if (in_cur_[static_cast<std::size_t>(w)] && !in_s_[static_cast<std::size_t>(w)])
                        next.push_back(w);
            set_flags(in_cur_, cur, 0);
            set_flags(in_s_, s, 0);
            normalize(next);
            if (!rest.empty())
                children.emplace_back(std::move(rest), std::move(next));
            return;
        }

        VertexSet sep = separator(cur, s);
        part.insert(part.end(), sep.begin(), sep.end());
        for (auto& comp : components_without(cur, sep)) {
            VertexSet piece_s;
            set_flags(in_s_, s, 1);
            for (Vertex v : comp)
                if (in_s_[static_cast<std::size_t>(v)])
                    piece_s.push_back(v);
            set_flags(in_s_, s, 0);
            piece_s.insert(piece_s.end(), sep.begin(), sep.end());
            normalize(piece_s);
            comp.insert(comp.end(), sep.begin(), sep.end());
            normalize(comp);
            split(comp, piece_s, part, children);
        }
    }

    // Bag (restricted to cur) such that every component of G[cur] minus the
    // bag holds at most |s|/2 vertices of s.
    VertexSet separator(const VertexSet& cur, const VertexSet& s)
    {
        const std::size_t nodes = td_.bags.size();
        std::vector<std::size_t> weight(nodes, 0);
        for (Vertex v : s)
            ++weight[static_cast<std::size_t>(top_[static_cast<std::size_t>(v)])];
        for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it)
            if (parent_[static_cast<std::size_t>(*it)] >= 0)
                weight[static_cast<std::size_t>(parent_[static_cast<std::size_t>(*it)])] +=
                    weight[static_cast<std::size_t>(*it)];
        const std::size_t half = s.size() / 2;
        Vertex x = preorder_.front();
        for (bool moved = true; moved;) {
            moved = false;
            for (Vertex c : children_[static_cast<std::size_t>(x)])
                if (weight[static_cast<std::size_t>(c)] > half) {
                    x = c;
                    moved = true;
                    break;
                }
        }
        VertexSet sep;
        set_flags(in_cur_, cur, 1);
        for (Vertex v : td_.bags[static_cast<std::size_t>(x)])
            if (in_cur_[static_cast<std::size_t>(v)])
                sep.push_back(v);
        set_flags(in_cur_, cur, 0);
        return sep;
    }

    std::vector<VertexSet> components_without(const VertexSet& cur, const VertexSet& sep)
    {
        set_flags(in_cur_, cur, 1);
        set_flags(in_cur_, sep, 0);
        std::vector<VertexSet> comps;
        ++stamp_;
        for (Vertex start : cur) {
            auto si = static_cast<std::size_t>(start);
            if (!in_cur_[si] || mark_[si] == stamp_)
                continue;
            VertexSet comp{start};
            mark_[si] = stamp_;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (Vertex w : g_.neighbours(comp[head])) {
                    auto wi = static_cast<std::size_t>(w);
                    if (in_cur_[wi] && mark_[wi] != stamp_) {
                        mark_[wi] = stamp_;
                        comp.push_back(w);
                    }
                }
            comps.push_back(std::move(comp));
        }
        set_flags(in_cur_, cur, 0);
        return comps;
    }

    void root_tree()
    {
        const std::size_t nodes = td_.bags.size();
        parent_.assign(nodes, -1);
        children_.assign(nodes, {});
        std::vector<int> depth(nodes, -1);
        if (nodes == 0)
            return;
        preorder_.push_back(0);
        depth[0] = 0;
        for (std::size_t head = 0; head < preorder_.size(); ++head) {
            Vertex x = preorder_[head];
            for (Vertex y : td_.tree.neighbours(x))
                if (depth[static_cast<std::size_t>(y)] < 0) {
                    depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
                    parent_[static_cast<std::size_t>(y)] = x;
                    children_[static_cast<std::size_t>(x)].push_back(y);
                    preorder_.push_back(y);
                }
        }
        top_.assign(g_.n(), -1);
        for (std::size_t x = 0; x < nodes; ++x)
            for (Vertex v : td_.bags[x]) {
                auto& t = top_[static_cast<std::size_t>(v)];
                if (t < 0 || depth[x] < depth[static_cast<std::size_t>(t)])
                    t = static_cast<Vertex>(x);
            }
    }

    static void set_flags(std::vector<char>& flags, const VertexSet& s, char value)
    {
        for (Vertex v : s)
            flags[static_cast<std::size_t>(v)] = value;
    }

    const Graph& g_;
    const TreeDecomposition& td_;
    std::size_t threshold_;
    std::vector<char> in_cur_, in_s_;
    std::vector<int> mark_;
    int stamp_ = 0;
    std::vector<Vertex> parent_, top_, preorder_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<VertexSet> parts_;
    std::vector<Edge> tree_edges_;
};

} // namespace

BoundedTreePartition tree_partition_bounded(const Graph& g, const TreeDecomposition& td)
{
    auto rep = validate_tree_decomposition(g, td);
    if (!rep)
        throw InvalidInput("tree_partition_bounded: invalid decomposition: " + rep.summary());

    BoundedTreePartition out;
    if (g.n() == 0)
        return out;
    out.k = static_cast<std::size_t>(width(td) + 1);
    out.delta = std::max<std::size_t>(1, max_degree(g));
    out.budget = 20 * out.k * out.delta;

    TreePartitionBuilder builder(g, td, out.k);
    std::vector<std::size_t> roots;
    for (const auto& comp : connected_components(g))
        roots.push_back(builder.build_component(comp));
    out.partition = builder.finish(roots);
    out.achieved = width(out.partition);
    if (out.achieved > out.budget)
        throw BudgetExceeded("tree_partition_bounded: width " + std::to_string(out.achieved) +
                             " exceeds 20*k*delta = " + std::to_string(out.budget));
    return out;
}

} // namespace clustered
