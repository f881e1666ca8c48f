#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace clustered {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Sorts and deduplicates in place.
void normalize(VertexSet& s);
VertexSet make_set(std::vector<Vertex> ids);

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Builds from an edge list. Duplicate edges (in either orientation) are
    /// merged; loops and out-of-range ids throw InvalidInput.
    Graph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t n() const { return adj_.size(); }
    std::size_t m() const { return m_; }
    bool empty() const { return adj_.empty(); }

    std::span<const Vertex> neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex u, Vertex v) const;
    bool valid_vertex(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adj_.size(); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Re-checks simplicity, symmetry and id ranges. Returns false on any breach.
    bool validate() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

/// Groups of vertices merged by contract_components, and where every old vertex went.
struct ContractionMap {
    std::vector<Vertex> image;       // old vertex -> new vertex
    std::vector<VertexSet> groups;   // new vertex -> preimage
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;   // new id -> old id
};

std::size_t max_degree(const Graph& g);

/// Components as sorted sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Component index per vertex, numbered in order of smallest member.
std::vector<int> component_labels(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Contracts each group (which must induce a connected subgraph) to a single
/// vertex. Groups are numbered first in the order given, then the ungrouped
/// vertices in increasing id order.
std::pair<Graph, ContractionMap> contract_components(const Graph& g, const std::vector<VertexSet>& groups);

/// Quotient graph G/P; parts must partition V(g) into non-empty sets.
Graph quotient(const Graph& g, const std::vector<VertexSet>& parts);

inline constexpr std::size_t kDefaultProductLimit = 1'000'000;

/// Strong product; vertex (v, x) is numbered v * b.n() + x.
Graph strong_product(const Graph& a, const Graph& b, std::size_t vertex_limit = kDefaultProductLimit);

Graph graph_power(const Graph& g, std::size_t p);

/// BFS distances from source, -1 where unreachable. Stops expanding beyond max_depth when >= 0.
std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth = -1);

} // namespace clustered
