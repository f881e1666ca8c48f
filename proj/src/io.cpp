#include "clustered/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "clustered/error.hpp"

namespace clustered {

namespace {

bool blank(const std::string& s)
{
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Whitespace-separated non-negative integers; false on anything else.
bool parse_numbers(const std::string& line, std::vector<std::uint64_t>& out)
{
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::uint64_t v = 0;
        auto [end, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
        if (ec != std::errc() || end == line.data() + i)
            return false;
        i = static_cast<std::size_t>(end - line.data());
        if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            return false;
        out.push_back(v);
    }
    return true;
}

const Json& field(const Json& j, const char* name, const char* what)
{
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string(what) + ": missing field \"" + name + "\"");
    return j.at(name);
}

std::vector<VertexSet> sets_from_json(const Json& j, const char* name, const char* what)
{
    const Json& arr = field(j, name, what);
    if (!arr.is_array())
        throw ParseError(std::string(what) + ": field \"" + name + "\" must be an array");
    std::vector<VertexSet> sets;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_array())
            throw ParseError(std::string(what) + ": " + name + "[" + std::to_string(i) + "] must be an array");
        VertexSet s;
        for (const auto& x : arr[i]) {
            if (!x.is_number_integer())
                throw ParseError(std::string(what) + ": " + name + "[" + std::to_string(i) +
                                 "] holds a non-integer entry");
            s.push_back(x.get<Vertex>());
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

std::size_t size_field(const Json& j, const char* name, const char* what)
{
    const Json& x = field(j, name, what);
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
        throw ParseError(std::string(what) + ": field \"" + name + "\" must be a non-negative integer");
    return x.get<std::size_t>();
}

Graph tree_from_json(const Json& j, std::size_t nodes, const char* what)
{
    std::vector<Edge> edges;
    for (const auto& e : sets_from_json(j, "tree_edges", what)) {
        if (e.size() != 2)
            throw ParseError(std::string(what) + ": every tree edge needs two endpoints");
        edges.emplace_back(e[0], e[1]);
    }
    try {
        return Graph(nodes, edges);
    } catch (const InvalidInput& ex) {
        throw ParseError(std::string(what) + ": tree_edges: " + ex.what());
    }
}

Json edges_json(const Graph& g)
{
    Json arr = Json::array();
    for (auto [u, v] : g.edges())
        arr.push_back({u, v});
    return arr;
}

} // namespace

Graph read_edge_list(std::istream& in, const std::string& source)
{
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::uint64_t> nums;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(source + ":" + std::to_string(lineno) + ": " + msg);
    };

    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line) || line[0] == '#')
            continue;
        have_header = true;
        break;
    }
    if (!have_header)
        throw ParseError(source + ": missing header line \"n m\"");
    if (!parse_numbers(line, nums) || nums.size() != 2)
        throw fail("header must be two non-negative integers \"n m\"");
    const std::uint64_t n = nums[0], m = nums[1];
    if (n > static_cast<std::uint64_t>(std::numeric_limits<Vertex>::max()))
        throw fail("vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 20)));
    while (edges.size() < m) {
        if (!std::getline(in, line))
            throw ParseError(source + ": expected " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
        ++lineno;
        if (!parse_numbers(line, nums) || nums.size() != 2)
            throw fail("edge line must be two non-negative integers \"u v\"");
        if (nums[0] >= nums[1])
            throw fail("edge endpoints must satisfy u < v");
        if (nums[1] >= n)
            throw fail("vertex " + std::to_string(nums[1]) + " out of range for n = " + std::to_string(n));
        Edge e{static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1])};
        if (!edges.empty() && !(edges.back() < e))
            throw fail("edges must be sorted and distinct");
        edges.push_back(e);
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!blank(line))
            throw fail("unexpected content after " + std::to_string(m) + " edges");
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

std::string write_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw ParseError("cannot write " + path);
}

Graph load_graph(const std::string& path)
{
    std::istringstream in(read_file(path));
    return read_edge_list(in, path);
}

Json load_json(const std::string& path)
{
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string digest(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json to_json(const Layering& l, std::size_t n)
{
    return {{"n", n}, {"layers", l.layers}};
}

Layering layering_from_json(const Json& j, std::size_t n)
{
    const std::size_t declared = size_field(j, "n", "layering");
    if (declared != n)
        throw ParseError("layering: field \"n\" is " + std::to_string(declared) + " but the graph has " +
                         std::to_string(n) + " vertices");
    return Layering{sets_from_json(j, "layers", "layering")};
}

Json to_json(const TreeDecomposition& td)
{
    return {{"tree_edges", edges_json(td.tree)}, {"bags", td.bags}};
}

TreeDecomposition decomposition_from_json(const Json& j)
{
    TreeDecomposition td;
    td.bags = sets_from_json(j, "bags", "decomposition");
    td.tree = tree_from_json(j, td.bags.size(), "decomposition");
    return td;
}

Json to_json(const TreePartition& tp)
{
    return {{"tree_edges", edges_json(tp.tree)}, {"parts", tp.parts}};
}

TreePartition tree_partition_from_json(const Json& j)
{
    TreePartition tp;
    tp.parts = sets_from_json(j, "parts", "tree-partition");
    tp.tree = tree_from_json(j, tp.parts.size(), "tree-partition");
    return tp;
}

Json to_json(const Colouring& c)
{
    return {{"palette", c.palette}, {"colours", c.colours}};
}

Colouring colouring_from_json(const Json& j, std::size_t n)
{
    Colouring c;
    c.palette = size_field(j, "palette", "colouring");
    const Json& arr = field(j, "colours", "colouring");
    if (!arr.is_array())
        throw ParseError("colouring: field \"colours\" must be an array");
    if (arr.size() != n)
        throw ParseError("colouring: " + std::to_string(arr.size()) + " colours for " + std::to_string(n) +
                         " vertices");
    for (std::size_t v = 0; v < arr.size(); ++v) {
        if (!arr[v].is_number_integer())
            throw ParseError("colouring: colours[" + std::to_string(v) + "] is not an integer");
        c.colours.push_back(arr[v].get<int>());
    }
    return c;
}

Json to_json(const ClusterCertificate& c)
{
    Json j = {{"palette", c.palette},
              {"max_component", c.max_component},
              {"per_colour_max", c.per_colour_max},
              {"component_count", c.components.size()},
              {"max_colours", c.max_colours},
              {"bound", c.bound},
              {"verified", c.ok}};
    if (!c.ok)
        j["failure"] = c.failure;
    return j;
}

Json to_json(const BoundChain& chain)
{
    return {{"k", chain.k},
            {"delta", chain.delta},
            {"budget", chain.budget},
            {"two_colour_budget", chain.two_colour_budget},
            {"band_widths", chain.band_widths},
            {"factors",
             {{"outer", chain.outer_factor}, {"inner", chain.inner_factor}, {"product", chain.product}}},
            {"tree_partition_width", chain.tree_partition_width}};
}

Json to_json(const ThreeColourResult& r)
{
    Json j = to_json(r.chain);
    j.update(to_json(r.certificate));
    j["variant"] = to_string(r.variant);
    j["layer_shift"] = r.layer_shift;
    if (r.variant == Variant::Main) {
        j["components_within_bands"] = r.components_within_bands;
    } else {
        j["blue_max"] = r.blue_max;
        Json large = Json::array();
        for (const auto& c : r.large_components)
            large.push_back({{"colour", c.colour},
                             {"size", c.size},
                             {"first_layer", c.first_layer},
                             {"last_layer", c.last_layer},
                             {"inside_band", c.inside_band}});
        j["large_components"] = large;
        j["band_containment"] = r.band_containment;
    }
    j["ok"] = r.ok();
    return j;
}

Json to_json(const KLPartition& klp)
{
    return {{"host_n", klp.hp.host.n()},
            {"host_edges", edges_json(klp.hp.host)},
            {"parts", klp.hp.parts},
            {"layers", klp.layering.layers},
            {"witness", to_json(klp.witness)},
            {"k", klp.k},
            {"l", klp.l}};
}

KLPartition kl_partition_from_json(const Json& j)
{
    KLPartition klp;
    const std::size_t host_n = size_field(j, "host_n", "partition");
    std::vector<Edge> edges;
    for (const auto& e : sets_from_json(j, "host_edges", "partition")) {
        if (e.size() != 2)
            throw ParseError("partition: every host edge needs two endpoints");
        edges.emplace_back(e[0], e[1]);
    }
    try {
        klp.hp.host = Graph(host_n, edges);
    } catch (const InvalidInput& ex) {
        throw ParseError(std::string("partition: host_edges: ") + ex.what());
    }
    klp.hp.parts = sets_from_json(j, "parts", "partition");
    klp.layering.layers = sets_from_json(j, "layers", "partition");
    klp.witness = decomposition_from_json(field(j, "witness", "partition"));
    klp.k = size_field(j, "k", "partition");
    klp.l = size_field(j, "l", "partition");
    return klp;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace clustered
