#include "clustered/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "clustered/colouring.hpp"
#include "clustered/error.hpp"
#include "clustered/generators.hpp"
#include "clustered/io.hpp"
#include "clustered/layered.hpp"

namespace clustered {

namespace {

std::vector<std::uint64_t> parse_numbers(const std::string& text, const char* what)
{
    std::vector<std::uint64_t> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || item[0] == '-')
            throw InvalidInput(std::string(what) + ": '" + item + "' is not a non-negative integer");
        out.push_back(v);
    }
    return out;
}

VertexSet parse_ids(const std::string& text, const char* what)
{
    VertexSet ids;
    for (auto v : parse_numbers(text, what))
        ids.push_back(static_cast<Vertex>(v));
    return ids;
}

// "1,2;3" -> {{1,2},{3}}
std::vector<VertexSet> parse_groups(const std::string& text, const char* what)
{
    std::vector<VertexSet> groups;
    if (text.empty())
        return groups;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        groups.push_back(parse_ids(item, what));
    return groups;
}

EliminationStrategy parse_strategy(const std::string& s)
{
    if (s == "min-degree")
        return EliminationStrategy::MinDegree;
    if (s == "min-fill")
        return EliminationStrategy::MinFill;
    throw InvalidInput("unknown elimination method '" + s + "'");
}

struct Report {
    explicit Report(std::string c) : command(std::move(c)) {}

    std::string command;
    Json inputs = Json::object();
    Json parameters = Json::object();
    Json certificate;
    bool pass = true;
};

class Session {
public:
    Session(std::ostream& out, std::ostream& err, bool timings)
        : out_(out), err_(err), timings_(timings), start_(std::chrono::steady_clock::now())
    {
    }

    std::string input(const std::string& path, Report& r, const std::string& role)
    {
        std::string text = read_file(path);
        r.inputs[role] = digest(text);
        return text;
    }

    Graph graph(const std::string& path, Report& r, const std::string& role = "graph")
    {
        std::istringstream in(input(path, r, role));
        return read_edge_list(in, path);
    }

    Json json(const std::string& path, Report& r, const std::string& role)
    {
        auto text = input(path, r, role);
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    void emit(const std::string& path, const std::string& text)
    {
        if (path.empty() || path == "-") {
            out_ << text;
            stdout_used_ = true;
        } else {
            write_file(path, text);
        }
    }

    int finish(Report& r, const std::string& report_path, const std::string& summary)
    {
        Json j = {{"command", r.command},
                  {"inputs", r.inputs},
                  {"parameters", r.parameters},
                  {"certificate", r.certificate},
                  {"pass", r.pass}};
        if (timings_)
            j["timings_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        if (!report_path.empty())
            write_file(report_path, dump(j));
        else if (!stdout_used_)
            out_ << dump(j);
        err_ << r.command << ": " << (r.pass ? "pass" : "FAIL") << (summary.empty() ? "" : " (" + summary + ")")
             << "\n";
        return r.pass ? kExitPass : kExitCheckFailed;
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    bool timings_;
    bool stdout_used_ = false;
    std::chrono::steady_clock::time_point start_;
};

std::string certificate_summary(const ClusterCertificate& c)
{
    std::string s = "palette " + std::to_string(c.palette) + ", clustering " + std::to_string(c.max_component) +
                    " <= " + std::to_string(c.bound);
    if (!c.ok)
        s += "; " + c.failure;
    return s;
}

Json validation_json(const ValidationReport& rep)
{
    Json j = {{"valid", rep.ok()}, {"violation_count", rep.violations.size()}};
    if (!rep.ok())
        j["summary"] = rep.summary();
    return j;
}

struct Options {
    std::string graph, out, report, layering, method = "min-degree", variant = "main";
    std::string family, params, base, apex, apexes_out, layering_out;
    std::string tree_partition, td, td_out, partition, colouring, certificate, bound = "auto";
    std::string apexes, clique, c0, c1, parts, layer_method = "bfs";
    std::uint64_t seed = 0;
    std::optional<int> root;
    std::size_t p = 2, max_colours = 3, exact_limit = kDefaultExactLimit;
};

int cmd_gen(Session& s, const Options& o)
{
    Report r("gen");
    r.parameters = {{"family", o.family}, {"params", o.params}, {"seed", o.seed}};
    Generated gen;
    Json cert;
    if (o.family == "apexed") {
        if (o.base.empty() || o.apex.empty())
            throw InvalidInput("gen --family apexed needs --base FAMILY:PARAMS and --apex COUNT,DEGREE");
        auto apex = parse_numbers(o.apex, "--apex");
        if (apex.size() != 2)
            throw InvalidInput("--apex takes COUNT,DEGREE");
        auto inst = gen_apexed(parse_generator_spec(o.base, o.seed), apex[0], apex[1], derive_seed(o.seed, 1));
        r.parameters["base"] = o.base;
        r.parameters["apex"] = o.apex;
        gen.graph = std::move(inst.graph);
        cert["apexes"] = inst.apexes;
        if (!o.apexes_out.empty())
            write_file(o.apexes_out, dump(Json(inst.apexes)));
    } else {
        GeneratorSpec spec{o.family, parse_numbers(o.params, "--params"), o.seed};
        gen = generate(spec);
        if (spec.family == "banded")
            cert["band_widths"] = gen_banded(spec.params[0], spec.params[1], spec.params[2], spec.params[3],
                                             spec.seed).band_widths;
    }
    const Graph& g = gen.graph;
    s.emit(o.out, write_edge_list(g));
    if (!o.layering_out.empty()) {
        Layering l = gen.has_layering ? gen.layering : bfs_layering_multi(g);
        write_file(o.layering_out, dump(to_json(l, g.n())));
    }
    cert["n"] = g.n();
    cert["m"] = g.m();
    cert["max_degree"] = max_degree(g);
    cert["valid"] = g.validate();
    r.certificate = cert;
    r.pass = g.validate();
    return s.finish(r, o.report, std::to_string(g.n()) + " vertices, " + std::to_string(g.m()) + " edges");
}

Layering layering_for(Session& s, const Graph& g, const std::string& path, Report& r)
{
    if (path.empty())
        return bfs_layering_multi(g);
    auto l = layering_from_json(s.json(path, r, "layering"), g.n());
    auto rep = validate_layering(g, l);
    if (!rep)
        throw InvalidInput("layering " + path + ": " + rep.summary());
    return l;
}

int cmd_layer(Session& s, const Options& o)
{
    Report r("layer");
    Graph g = s.graph(o.graph, r);
    if (o.layer_method != "bfs")
        throw InvalidInput("unknown layering method '" + o.layer_method + "'");
    r.parameters = {{"method", o.layer_method}};
    Layering l;
    if (o.root) {
        r.parameters["root"] = *o.root;
        l = bfs_layering(g, *o.root);
    } else {
        l = bfs_layering_multi(g);
    }
    s.emit(o.out, dump(to_json(l, g.n())));
    auto rep = validate_layering(g, l);
    r.certificate = validation_json(rep);
    r.certificate["layers"] = l.size();
    r.pass = rep.ok();
    return s.finish(r, o.report, std::to_string(l.size()) + " layers");
}

TreeDecomposition decompose(const Graph& g, const std::string& method, std::size_t exact_limit)
{
    if (method == "exact")
        return exact_treewidth(g, exact_limit).decomposition;
    return heuristic_tree_decomposition(g, parse_strategy(method));
}

int cmd_tw(Session& s, const Options& o)
{
    Report r("tw");
    Graph g = s.graph(o.graph, r);
    r.parameters = {{"method", o.method}};
    if (o.method == "exact")
        r.parameters["exact_limit"] = o.exact_limit;
    auto td = decompose(g, o.method, o.exact_limit);
    s.emit(o.out, dump(to_json(td)));
    auto rep = validate_tree_decomposition(g, td);
    r.certificate = validation_json(rep);
    r.certificate["width"] = width(td);
    r.certificate["bags"] = td.bags.size();
    r.pass = rep.ok();
    return s.finish(r, o.report, "width " + std::to_string(width(td)));
}

int cmd_colour2(Session& s, const Options& o)
{
    Report r("colour2");
    Graph g = s.graph(o.graph, r);
    TreePartition tp;
    Json cert;
    std::size_t budget = 0;
    if (!o.tree_partition.empty()) {
        tp = tree_partition_from_json(s.json(o.tree_partition, r, "tree_partition"));
        auto rep = validate_tree_partition(g, tp);
        if (!rep)
            throw InvalidInput("tree-partition " + o.tree_partition + ": " + rep.summary());
        budget = width(tp);
        cert["k"] = nullptr;
        cert["delta"] = nullptr;
    } else {
        r.parameters["method"] = o.method;
        auto td = heuristic_tree_decomposition(g, parse_strategy(o.method));
        auto btp = tree_partition_bounded(g, td);
        tp = std::move(btp.partition);
        budget = btp.budget;
        cert["k"] = btp.k;
        cert["delta"] = btp.delta;
        cert["band_widths"] = {width(td)};
    }
    auto res = two_colour_bounded(g, tp);
    s.emit(o.out, dump(to_json(res.colouring)));
    // independent re-check against the budget
    auto check = verify_clustering(g, res.colouring, 2, budget);
    cert.update(to_json(check));
    cert["budget"] = budget;
    cert["tree_partition_width"] = width(tp);
    cert["factors"] = {{"tree_partition_width", width(tp)}, {"clustering", check.max_component}};
    r.certificate = cert;
    r.pass = check.ok;
    return s.finish(r, o.report, certificate_summary(check));
}

int cmd_colour3(Session& s, const Options& o)
{
    Report r("colour3");
    Graph g = s.graph(o.graph, r);
    Layering l = layering_for(s, g, o.layering, r);
    Variant variant = parse_variant(o.variant);
    r.parameters = {{"variant", to_string(variant)}, {"method", o.method}};
    auto dec = heuristic_decomposer(parse_strategy(o.method));
    auto res = variant == Variant::Main ? three_colour_main(g, l, dec) : three_colour_appendix(g, l, dec);
    s.emit(o.out, dump(to_json(res.colouring)));
    auto check = verify_clustering(g, res.colouring, 3, res.chain.budget);
    Json cert = to_json(res);
    cert["reverified"] = check.ok;
    r.certificate = cert;
    r.pass = res.ok() && check.ok;
    return s.finish(r, o.report, certificate_summary(check) + ", product " + std::to_string(res.chain.product));
}

int cmd_power(Session& s, const Options& o)
{
    Report r("power");
    Graph g = s.graph(o.graph, r);
    TreeDecomposition td;
    if (o.td.empty()) {
        td = heuristic_tree_decomposition(g, parse_strategy(o.method));
    } else {
        td = decomposition_from_json(s.json(o.td, r, "td"));
        auto rep = validate_tree_decomposition(g, td);
        if (!rep)
            throw InvalidInput("decomposition " + o.td + ": " + rep.summary());
    }
    Layering l = layering_for(s, g, o.layering, r);
    r.parameters = {{"p", o.p}};
    auto pd = power_layered_decomposition(g, td, l, o.p);
    s.emit(o.out, write_edge_list(pd.power));
    if (!o.td_out.empty()) {
        Json j = to_json(pd.ltd.td);
        j["layering"] = to_json(pd.ltd.layering, g.n());
        j["layered_width"] = pd.ltd.layered_width;
        write_file(o.td_out, dump(j));
    }
    auto rep = validate_tree_decomposition(pd.power, pd.ltd.td);
    Json cert = validation_json(rep);
    cert["k"] = pd.k;
    cert["delta"] = pd.delta;
    cert["bound"] = pd.bound;
    cert["strict"] = pd.strict;
    cert["layered_width"] = pd.ltd.layered_width;
    cert["within_bound"] = pd.within_bound();
    r.certificate = cert;
    r.pass = rep.ok() && pd.within_bound();
    return s.finish(r, o.report,
                    "layered width " + std::to_string(pd.ltd.layered_width) + (pd.strict ? " < " : " <= ") +
                        std::to_string(pd.bound));
}

Json partition_summary(const Graph& g, const KLPartition& klp)
{
    auto rep = validate_kl_partition(g, klp);
    Json j = validation_json(rep);
    j["k"] = klp.k;
    j["l"] = klp.l;
    j["host_n"] = klp.hp.host.n();
    j["witness_width"] = width(klp.witness);
    if (validate_h_partition(g, klp.hp).ok() && validate_layering(g, klp.layering).ok())
        j["layered_width"] = partition_layered_width(g, klp.hp, klp.layering);
    return j;
}

KLPartition load_partition(Session& s, const std::string& path, Report& r)
{
    return kl_partition_from_json(s.json(path, r, "partition"));
}

int cmd_partition(Session& s, const std::string& action, const Options& o)
{
    Report r("partition " + action);
    Graph g = s.graph(o.graph, r);
    if (action == "trivial") {
        KLPartition klp;
        klp.hp.host = g;
        for (std::size_t v = 0; v < g.n(); ++v)
            klp.hp.parts.push_back({static_cast<Vertex>(v)});
        klp.layering = layering_for(s, g, o.layering, r);
        klp.witness = heuristic_tree_decomposition(g, parse_strategy(o.method));
        klp.k = static_cast<std::size_t>(std::max(0, width(klp.witness)));
        klp.l = g.n() > 0 ? 1 : 0;
        s.emit(o.out, dump(to_json(klp)));
        r.certificate = partition_summary(g, klp);
        r.pass = r.certificate["valid"].get<bool>();
        return s.finish(r, o.report, "k " + std::to_string(klp.k));
    }
    KLPartition klp = load_partition(s, o.partition, r);
    if (action == "validate") {
        r.certificate = partition_summary(g, klp);
        r.pass = r.certificate["valid"].get<bool>();
        return s.finish(r, o.report, r.pass ? "" : r.certificate["summary"].get<std::string>());
    }
    if (action == "drop-apices") {
        VertexSet a = o.apexes.empty() ? VertexSet{} : s.json(o.apexes, r, "apexes").get<VertexSet>();
        auto res = drop_apices(g, a, klp);
        s.emit(o.out, dump(to_json(res.klp)));
        Json cert = partition_summary(g, res.klp);
        cert["hit_layers"] = res.hit_layers;
        cert["apex_degree"] = res.apex_degree;
        cert["width_bound"] = res.width_bound;
        cert["input_k"] = klp.k;
        cert["input_l"] = klp.l;
        r.certificate = cert;
        r.pass = cert["valid"].get<bool>() && width(res.klp.witness) <= static_cast<int>(klp.k) + 1;
        return s.finish(r, o.report, "(" + std::to_string(res.klp.k) + ", " + std::to_string(res.klp.l) + ")");
    }
    if (action == "embed") {
        auto emb = embed_in_product(g, klp);
        Json pos = Json::array();
        for (const auto& p : emb.position)
            pos.push_back({p.host, p.layer, p.copy});
        s.emit(o.out, dump(Json{{"positions", pos}}));
        Json bad = Json::array();
        for (auto [u, v] : emb.failing_edges)
            bad.push_back({u, v});
        r.certificate = {{"failing_edges", bad}, {"edges_checked", g.m()}};
        r.pass = emb.ok();
        return s.finish(r, o.report, std::to_string(emb.failing_edges.size()) + " failing edges");
    }
    if (action == "width1") {
        auto res = make_width_one(g, klp);
        s.emit(o.out, dump(to_json(res)));
        Json cert = partition_summary(g, res);
        const int limit = static_cast<int>((klp.k + 1) * klp.l) - 1;
        cert["witness_limit"] = limit;
        r.certificate = cert;
        r.pass = cert["valid"].get<bool>() && cert.value("layered_width", std::size_t{2}) <= 1 &&
                 width(res.witness) <= limit;
        return s.finish(r, o.report, "witness width " + std::to_string(width(res.witness)));
    }
    if (action == "friendly") {
        auto rep = friendliness_check(g, klp, parse_ids(o.clique, "--clique"), parse_ids(o.c0, "--c0"),
                                      parse_ids(o.c1, "--c1"), parse_groups(o.parts, "--parts"));
        r.certificate = {{"friendly", rep.friendly}, {"reasons", rep.reasons}};
        r.pass = rep.friendly;
        return s.finish(r, o.report, rep.friendly ? "friendly" : rep.reasons.front());
    }
    throw InvalidInput("unknown partition action '" + action + "'");
}

int cmd_verify(Session& s, const Options& o)
{
    Report r("verify");
    Graph g = s.graph(o.graph, r);
    Colouring c = colouring_from_json(s.json(o.colouring, r, "colouring"), g.n());
    std::size_t bound = 0;
    if (o.bound == "auto") {
        if (o.certificate.empty())
            throw InvalidInput("--bound auto needs --certificate");
        Json cert = s.json(o.certificate, r, "certificate");
        if (cert.contains("certificate"))
            cert = cert["certificate"];
        if (!cert.contains("budget") || !cert["budget"].is_number_unsigned())
            throw ParseError(o.certificate + ": missing field \"budget\"");
        bound = cert["budget"].get<std::size_t>();
    } else {
        auto v = parse_numbers(o.bound, "--bound");
        if (v.size() != 1)
            throw InvalidInput("--bound takes a single integer or 'auto'");
        bound = v[0];
    }
    r.parameters = {{"max_colours", o.max_colours}, {"bound", bound}};
    auto check = verify_clustering(g, c, o.max_colours, bound);
    Json cert = to_json(check);
    if (check.offending)
        cert["offending"] = {{"colour", check.offending->colour}, {"vertices", check.offending->vertices}};
    r.certificate = cert;
    r.pass = check.ok;
    return s.finish(r, o.report, certificate_summary(check));
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Clustered colourings of layered graphs", "clustered"};
    app.require_subcommand(1);
    bool timings = false;
    app.add_flag("--timings", timings, "Add wall-clock timings to reports");
    Options o;

    auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "Edge-list file")->required(); };
    auto out_opt = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Output file (default: standard output)");
        sub->add_option("--report", o.report, "JSON report file");
    };

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--family", o.family, "grid | trigrid | sp | banded | apexed")
        ->required()
        ->check(CLI::IsMember({"grid", "trigrid", "sp", "banded", "apexed"}));
    gen->add_option("--params", o.params, "Comma-separated size parameters");
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--base", o.base, "Base instance of an apexed graph, FAMILY:PARAMS");
    gen->add_option("--apex", o.apex, "Apex COUNT,DEGREE");
    gen->add_option("--apexes-out", o.apexes_out, "Write apex ids as JSON");
    gen->add_option("--layering-out", o.layering_out, "Write a layering as JSON");
    out_opt(gen);

    auto* layer = app.add_subcommand("layer", "Compute a layering");
    graph_opt(layer);
    layer->add_option("--method", o.layer_method, "bfs");
    layer->add_option("--root", o.root, "BFS root (graph must be connected)");
    out_opt(layer);

    auto* tw = app.add_subcommand("tw", "Compute a tree decomposition");
    graph_opt(tw);
    tw->add_option("--method", o.method, "min-degree | min-fill | exact")
        ->check(CLI::IsMember({"min-degree", "min-fill", "exact"}));
    tw->add_option("--exact-limit", o.exact_limit, "Largest graph accepted by the exact method");
    out_opt(tw);

    auto* c2 = app.add_subcommand("colour2", "2-colour through a tree-partition");
    graph_opt(c2);
    c2->add_option("--tree-partition", o.tree_partition, "Tree-partition JSON (default: built from a decomposition)");
    c2->add_option("--method", o.method, "min-degree | min-fill")->check(CLI::IsMember({"min-degree", "min-fill"}));
    out_opt(c2);

    auto* c3 = app.add_subcommand("colour3", "3-colour a layered graph");
    graph_opt(c3);
    c3->add_option("--layering", o.layering, "Layering JSON (default: BFS per component)");
    c3->add_option("--variant", o.variant, "main | appendix")->check(CLI::IsMember({"main", "appendix"}));
    c3->add_option("--method", o.method, "min-degree | min-fill")->check(CLI::IsMember({"min-degree", "min-fill"}));
    out_opt(c3);

    auto* power = app.add_subcommand("power", "Layered decomposition of a graph power");
    graph_opt(power);
    power->add_option("--p", o.p, "Power")->required();
    power->add_option("--td", o.td, "Decomposition JSON (default: heuristic)");
    power->add_option("--layering", o.layering, "Layering JSON (default: BFS per component)");
    power->add_option("--td-out", o.td_out, "Write the layered decomposition of the power");
    power->add_option("--method", o.method, "min-degree | min-fill")->check(CLI::IsMember({"min-degree", "min-fill"}));
    out_opt(power);

    auto* part = app.add_subcommand("partition", "Layered partitions");
    part->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> actions;
    const std::pair<const char*, const char*> actions_help[] = {
        {"trivial", "Singleton-part partition of a graph"},
        {"validate", "Check a partition against a graph"},
        {"drop-apices", "Extend a partition of G - A to G"},
        {"embed", "Embed into host x path x K_l and check every edge"},
        {"width1", "Rebuild as a layered width 1 partition"},
        {"friendly", "Check friendliness to a clique"},
    };
    for (auto [name, help] : actions_help) {
        auto* sub = part->add_subcommand(name, help);
        graph_opt(sub);
        out_opt(sub);
        if (std::string(name) == "trivial") {
            sub->add_option("--layering", o.layering, "Layering JSON (default: BFS per component)");
            sub->add_option("--method", o.method, "min-degree | min-fill")
                ->check(CLI::IsMember({"min-degree", "min-fill"}));
        } else {
            sub->add_option("--partition", o.partition, "Partition JSON")->required();
        }
        actions.emplace_back(name, sub);
    }
    actions[2].second->add_option("--apexes", o.apexes, "JSON array of apex ids");
    actions[5].second->add_option("--clique", o.clique, "Clique ids, comma-separated");
    actions[5].second->add_option("--c0", o.c0, "Clique vertices required in layer 0");
    actions[5].second->add_option("--c1", o.c1, "Clique vertices required in layer 1");
    actions[5].second->add_option("--parts", o.parts, "Prescribed parts, e.g. 1,2;3");

    auto* verify = app.add_subcommand("verify", "Check a colouring's clustering");
    graph_opt(verify);
    verify->add_option("--colouring", o.colouring, "Colouring JSON")->required();
    verify->add_option("--max-colours", o.max_colours, "Largest palette allowed");
    verify->add_option("--bound", o.bound, "Clustering bound, or 'auto' to read the certificate budget");
    verify->add_option("--certificate", o.certificate, "Certificate or run report carrying a budget");
    verify->add_option("--report", o.report, "JSON report file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Session s(out, err, timings);
    try {
        if (gen->parsed())
            return cmd_gen(s, o);
        if (layer->parsed())
            return cmd_layer(s, o);
        if (tw->parsed())
            return cmd_tw(s, o);
        if (c2->parsed())
            return cmd_colour2(s, o);
        if (c3->parsed())
            return cmd_colour3(s, o);
        if (power->parsed())
            return cmd_power(s, o);
        if (verify->parsed())
            return cmd_verify(s, o);
        for (auto& [name, sub] : actions)
            if (sub->parsed())
                return cmd_partition(s, name, o);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

} // namespace clustered
