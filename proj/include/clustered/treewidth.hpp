#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "clustered/graph.hpp"
#include "clustered/layering.hpp"

namespace clustered {

/// Bags indexed by the nodes of a tree.
struct TreeDecomposition {
    Graph tree;
    std::vector<VertexSet> bags;

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Disjoint parts indexed by the nodes of a tree; edges of the host graph run
/// inside a part or between parts on adjacent tree nodes.
struct TreePartition {
    Graph tree;
    std::vector<VertexSet> parts;

    friend bool operator==(const TreePartition&, const TreePartition&) = default;
};

enum class EliminationStrategy { MinDegree, MinFill };

/// Maps a graph to a tree decomposition of it. Used to plug different
/// decomposers into the banded colourings.
using Decomposer = std::function<TreeDecomposition(const Graph&)>;

bool is_tree(const Graph& t);

/// Throws InvalidInput if td.tree is not a tree.
ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// max bag size - 1; -1 when there are no bags.
int width(const TreeDecomposition& td);

/// Max part size; 0 when there are no parts.
std::size_t width(const TreePartition& tp);

/// Decomposition read off an elimination ordering (bag of v = v plus its
/// later neighbours in the filled graph). Always valid.
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Merges tree nodes whose bag is contained in a neighbouring bag.
TreeDecomposition compress(TreeDecomposition td);

/// Greedy elimination; ties go to the lowest vertex id.
TreeDecomposition heuristic_tree_decomposition(const Graph& g,
                                               EliminationStrategy strategy = EliminationStrategy::MinDegree);

Decomposer heuristic_decomposer(EliminationStrategy strategy = EliminationStrategy::MinDegree);

inline constexpr std::size_t kDefaultExactLimit = 14;

struct ExactTreewidth {
    int width;
    TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over vertex subsets. Refuses
/// (TooLarge) above `limit` vertices.
ExactTreewidth exact_treewidth(const Graph& g, std::size_t limit = kDefaultExactLimit);

Decomposer exact_decomposer(std::size_t limit = kDefaultExactLimit);

/// Throws InvalidInput if tp.tree is not a tree.
ValidationReport validate_tree_partition(const Graph& g, const TreePartition& tp);

struct BoundedTreePartition {
    TreePartition partition;
    std::size_t k = 0;          // width(td) + 1
    std::size_t delta = 0;      // max(1, max degree)
    std::size_t budget = 0;     // 20 k delta
    std::size_t achieved = 0;   // width of the partition
};

/// Tree-partition of width at most 20 k delta, where k = width(td)+1 and
/// delta is the maximum degree (at least 1).
///
/// Each part is grown from a required root set S. While |S| > 4k, a bag of
/// td that halves S splits the graph into pieces that are handled
/// independently and share the separator in the root part. Once S is small,
/// it becomes a part on its own and N(S) seeds the single child part. This
/// keeps every part below 8 k delta; the 20 k delta budget is checked and a
/// breach throws BudgetExceeded.
BoundedTreePartition tree_partition_bounded(const Graph& g, const TreeDecomposition& td);

/// Restriction of a decomposition to the subgraph induced by `keep`
/// (relabelled through to_parent as produced by induced_subgraph).
TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const std::vector<Vertex>& to_parent,
                                         std::size_t parent_n);

/// Decomposition of the graph obtained by contracting `map.groups`: every
/// bag keeps the images of its vertices. Valid whenever td is valid for the
/// source graph and every group is connected.
TreeDecomposition contract_decomposition(const TreeDecomposition& td, const ContractionMap& map);

/// Joins decompositions of vertex-disjoint graphs into one tree. `to_parent[i]`
/// maps the i-th graph's ids into the combined id space of size n.
TreeDecomposition join_decompositions(const std::vector<TreeDecomposition>& parts,
                                      const std::vector<std::vector<Vertex>>& to_parent);

} // namespace clustered
