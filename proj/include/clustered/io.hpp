#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "clustered/colouring.hpp"
#include "clustered/graph.hpp"
#include "clustered/layered.hpp"
#include "clustered/layering.hpp"
#include "clustered/treewidth.hpp"

namespace clustered {

using Json = nlohmann::json;

/// Edge-list text: header "n m", then m lines "u v" (u < v, sorted). Lines
/// starting with '#' may precede the header. `source` names the input in errors.
Graph read_edge_list(std::istream& in, const std::string& source = "<input>");
std::string write_edge_list(const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
Graph load_graph(const std::string& path);
Json load_json(const std::string& path);

/// FNV-1a 64, as 16 hex digits.
std::string digest(const std::string& bytes);

Json to_json(const Layering& l, std::size_t n);
Layering layering_from_json(const Json& j, std::size_t n);

Json to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const Json& j);
Json to_json(const TreePartition& tp);
TreePartition tree_partition_from_json(const Json& j);

Json to_json(const Colouring& c);
Colouring colouring_from_json(const Json& j, std::size_t n);

Json to_json(const ClusterCertificate& c);
Json to_json(const BoundChain& chain);
/// Certificate of a 3-colouring: clustering data, bound chain and variant checks.
Json to_json(const ThreeColourResult& r);

Json to_json(const KLPartition& klp);
KLPartition kl_partition_from_json(const Json& j);

/// Pretty-printed with a trailing newline; key order is fixed, so output is reproducible.
std::string dump(const Json& j);

} // namespace clustered
