#pragma once

#include <string>
#include <vector>

#include "clustered/graph.hpp"

namespace clustered {

/// Ordered sequence of vertex sets (V_0, V_1, ...). Layer indices are
/// semantic: empty layers are kept, so index i always means the same layer.
struct Layering {
    std::vector<VertexSet> layers;

    std::size_t size() const { return layers.size(); }

    /// Layer index per vertex of an n-vertex graph, -1 where absent. Assumes disjointness.
    std::vector<int> index_of(std::size_t n) const;

    friend bool operator==(const Layering&, const Layering&) = default;
};

/// One problem found while checking a structure against a graph.
struct Violation {
    enum class Kind { Duplicate, Missing, Edge, InvalidId, Structure };
    Kind kind;
    Vertex u = -1;
    Vertex v = -1;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }
    std::string summary(std::size_t max_items = 5) const;
};

ValidationReport validate_layering(const Graph& g, const Layering& l);

/// Layers by exact distance from root. g must be connected.
Layering bfs_layering(const Graph& g, Vertex root);

/// Per-component BFS from each component's smallest vertex, merged by index.
Layering bfs_layering_multi(const Graph& g);

/// Prepends s empty layers.
Layering shift_layering(const Layering& l, std::size_t s);

/// Union of layers first..first+width-1; out-of-range layers count as empty.
VertexSet band(const Layering& l, std::size_t first, std::size_t width);

/// W_i = V_{ip} u ... u V_{ip+p-1}.
Layering coarsen_layering(const Layering& l, std::size_t p);

struct CollapsedLayering {
    Layering layering;
    std::vector<std::size_t> distance;  // d_j for every original index j
};

/// Re-layers by distance to the nearest hit layer: W_i is the union of all V_j
/// whose index is at distance i (along the path 0,1,2,...) from hit_layers.
CollapsedLayering distance_collapse(const Layering& l, const std::vector<std::size_t>& hit_layers);

} // namespace clustered
