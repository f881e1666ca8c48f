#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clustered/graph.hpp"
#include "clustered/layering.hpp"
#include "clustered/treewidth.hpp"

namespace clustered {

struct LayeredTreeDecomposition {
    TreeDecomposition td;
    Layering layering;
    std::size_t layered_width = 0;   // max over bags and layers of |B_x ∩ V_i|
};

/// Partition (A_x : x in V(host)) of a graph's vertices, indexed by host vertices.
struct HPartition {
    Graph host;
    std::vector<VertexSet> parts;
};

/// H-partition plus a layering and a tree decomposition of the host
/// witnessing its treewidth. `k` and `l` are the claimed bounds.
struct KLPartition {
    HPartition hp;
    Layering layering;
    TreeDecomposition witness;
    std::size_t k = 0;
    std::size_t l = 0;
};

std::size_t layered_width_of_decomposition(const Graph& g, const TreeDecomposition& td, const Layering& l);

ValidationReport validate_h_partition(const Graph& g, const HPartition& hp);

std::size_t partition_layered_width(const Graph& g, const HPartition& hp, const Layering& l);

/// Checks the H-partition, the layering, the witness decomposition of the
/// host, width(witness) <= k and layered width <= l.
ValidationReport validate_kl_partition(const Graph& g, const KLPartition& klp);

/// Replaces each host bag by the union of its parts.
LayeredTreeDecomposition layered_td_from_partition(const Graph& g, const KLPartition& klp);

struct PowerDecomposition {
    Graph power;
    LayeredTreeDecomposition ltd;
    std::size_t k = 0;          // layered width of the input decomposition
    std::size_t delta = 0;
    std::size_t bound = 0;      // exclusive bound 2 p k delta^(p/2) when delta >= 2, else inclusive 2 p k
    bool strict = true;         // whether `bound` is exclusive
    bool within_bound() const { return strict ? ltd.layered_width < bound : ltd.layered_width <= bound; }
};

/// Layered decomposition of g^p: bags grow by the radius floor(p/2) ball
/// around each member, layers merge in runs of p.
PowerDecomposition power_layered_decomposition(const Graph& g, const TreeDecomposition& td, const Layering& l,
                                               std::size_t p);

/// Vertex ids of g - a, in increasing order (the id space klp_of_rest lives in).
std::vector<Vertex> rest_vertices(const Graph& g, const VertexSet& a);

struct DropApicesResult {
    KLPartition klp;
    std::vector<std::size_t> hit_layers;   // I
    std::size_t apex_degree = 0;           // max(1, max degree over a)
    std::size_t width_bound = 0;           // 2 l delta_A |a|
};

/// (k+1, 2 l delta_A |a|)-partition of g from a (k, l)-partition of g - a.
/// klp_of_rest is indexed by the ids of g - a as listed by rest_vertices.
DropApicesResult drop_apices(const Graph& g, const VertexSet& a, const KLPartition& klp_of_rest);

struct ProductPosition {
    Vertex host = -1;
    std::size_t layer = 0;
    std::size_t copy = 0;
};

struct ProductEmbedding {
    std::vector<ProductPosition> position;       // per vertex
    std::vector<Edge> failing_edges;
    bool ok() const { return failing_edges.empty(); }
};

/// Maps g into host ⊠ P ⊠ K_l and checks every edge against the product's adjacency.
ProductEmbedding embed_in_product(const Graph& g, const KLPartition& klp);

/// Parts recovered from an embedding: one per host vertex.
HPartition partition_from_embedding(const Graph& host, const ProductEmbedding& emb);

/// Layered width 1 partition over host ⊠ K_l restricted to the used (host, copy) pairs.
KLPartition make_width_one(const Graph& g, const KLPartition& klp);

struct FriendlinessReport {
    bool friendly = false;
    std::vector<std::string> reasons;
};

/// Whether klp is friendly to (clique, {c0, c1}, prescribed_parts): every
/// prescribed part is a part of klp, c0 ⊆ V_0 and c1 ⊆ V_1.
FriendlinessReport friendliness_check(const Graph& g, const KLPartition& klp, const VertexSet& clique,
                                      const VertexSet& c0, const VertexSet& c1,
                                      const std::vector<VertexSet>& prescribed_parts);

} // namespace clustered
