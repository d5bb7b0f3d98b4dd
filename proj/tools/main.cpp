// Command line front end for the toric graph toolkit.
//
// Exit codes: 0 on success, 1 when a computation fails or a verification
// reports a failing property, 2 when a graph file is rejected by the parser.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toricgraph/chromatic.hpp"
#include "toricgraph/enumerate.hpp"
#include "toricgraph/errors.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/graph_coloring.hpp"
#include "toricgraph/ideal.hpp"
#include "toricgraph/kmy.hpp"
#include "toricgraph/log.hpp"
#include "toricgraph/order.hpp"
#include "toricgraph/toric.hpp"
#include "toricgraph/verify.hpp"

using json = nlohmann::ordered_json;
using namespace toricgraph;

namespace {

struct GlobalOptions {
    std::string format = "human";
    std::uint64_t seed = 0;
    int max_edges = 24;
};

bool want_json(const GlobalOptions& g) { return g.format == "json"; }

Graph load_graph(const std::string& path, const GlobalOptions& g) {
    Graph graph = Graph::parse_file(path);
    if (graph.q() > g.max_edges)
        throw CapabilityError("graph has " + std::to_string(graph.q()) +
                              " edges, above --max-edges " + std::to_string(g.max_edges));
    log_line(1, "loaded " + path + ": p=" + std::to_string(graph.p()) +
                    " q=" + std::to_string(graph.q()));
    return graph;
}

MonomialOrder resolve_order(const Graph& graph, const std::string& spec, bool partial) {
    if (spec.empty()) return reference_order(static_cast<std::size_t>(graph.q()));
    return parse_order(spec, graph.labels(), partial);
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
    return json{{"p", g.p()}, {"q", g.q()}, {"edges", edges}};
}

std::string graph_line(const Graph& g) {
    return "graph p=" + std::to_string(g.p()) + " q=" + std::to_string(g.q());
}

void emit(const json& payload, const GlobalOptions& g, std::string human) {
    if (want_json(g)) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::vector<std::string> generator_strings(const BinomialIdeal& ideal, const Graph& g) {
    std::vector<std::string> out;
    for (const Binomial& b : ideal.generators()) out.push_back(b.str(g.labels()));
    return out;
}

int run_basis_command(const std::string& command, const Graph& graph, const MonomialOrder& order,
                      const GlobalOptions& g) {
    auto gb = buchberger(toric_ideal(graph), order);
    auto gens = generator_strings(gb, graph);
    json payload{{"command", command},
                 {"graph", graph_json(graph)},
                 {"order", order.spec(graph.labels())},
                 {"zero", gb.is_zero()},
                 {"generators", gens}};
    std::string human = graph_line(graph) + "\norder " + order.spec(graph.labels()) + "\n";
    if (gb.is_zero()) {
        human += "zero ideal\n";
    } else {
        human += "generators " + std::to_string(gens.size()) + "\n";
        for (const auto& s : gens) human += "  " + s + "\n";
    }
    emit(payload, g, human);
    return 0;
}

int run_init(const Graph& graph, const MonomialOrder& order, const GlobalOptions& g) {
    auto gens = initial_ideal(graph, order);
    std::vector<std::string> printed;
    for (const auto& m : gens) printed.push_back(m.str(graph.labels()));
    int height = monomial_ideal_height(gens);
    json payload{{"command", "init"},
                 {"graph", graph_json(graph)},
                 {"order", order.spec(graph.labels())},
                 {"generators", printed},
                 {"height", height}};
    std::string human = graph_line(graph) + "\norder " + order.spec(graph.labels()) + "\n";
    if (printed.empty()) {
        human += "zero ideal\n";
    } else {
        human += "minimal generators " + std::to_string(printed.size()) + "\n";
        for (const auto& s : printed) human += "  " + s + "\n";
    }
    human += "height " + std::to_string(height) + "\n";
    emit(payload, g, human);
    return 0;
}

int run_kmy(const Graph& graph, int edge_id, const std::string& order_spec, bool partial,
            const GlobalOptions& g) {
    std::size_t slot = graph.slot_of_id(edge_id);
    MonomialOrder order =
        order_spec.empty()
            ? MonomialOrder::y_top(slot, reference_order(static_cast<std::size_t>(graph.q())))
            : parse_order(order_spec, graph.labels(), partial);
    auto d = kmy_decompose(toric_ideal(graph), slot, order);
    auto labels = graph.labels();

    json elems = json::array();
    for (const auto& s : d.split) {
        json e{{"element", s.element.str(labels)},
               {"d", s.d},
               {"q", s.q.str(labels)},
               {"r", nullptr}};
        if (s.r) e["r"] = s.r->str(labels);
        elems.push_back(e);
    }
    json payload{{"command", "kmy"},
                 {"graph", graph_json(graph)},
                 {"y", labels.at(slot)},
                 {"order", order.spec(labels)},
                 {"degenerate", d.degenerate},
                 {"gb", elems},
                 {"C", generator_strings(d.C, graph)},
                 {"N", generator_strings(d.N, graph)}};

    std::string human = graph_line(graph) + "\ny " + labels.at(slot) + "\norder " +
                        order.spec(labels) + "\ndegenerate " + (d.degenerate ? "yes" : "no") +
                        "\n";
    human += "gb " + std::to_string(d.split.size()) + "\n";
    for (const auto& s : d.split) {
        human += "  " + s.element.str(labels) + " | d=" + std::to_string(s.d) + " q=" +
                 s.q.str(labels);
        if (s.r) human += " r=" + s.r->str(labels);
        human += "\n";
    }
    human += "C " + std::to_string(d.C.generators().size()) + "\n";
    for (const auto& s : generator_strings(d.C, graph)) human += "  " + s + "\n";
    human += "N " + std::to_string(d.N.generators().size()) + "\n";
    for (const auto& s : generator_strings(d.N, graph)) human += "  " + s + "\n";
    emit(payload, g, human);
    return 0;
}

int run_height(const Graph& graph, const GlobalOptions& g) {
    auto h = height_toric(graph);
    auto seq = deletion_sequence(graph);
    json steps = json::array();
    for (const auto& s : seq) steps.push_back("e" + std::to_string(s.edge_id));
    json payload{{"command", "height"},
                 {"graph", graph_json(graph)},
                 {"formula", h.formula},
                 {"degeneration", h.degeneration},
                 {"deletion_sequence", steps}};
    std::string human = graph_line(graph) + "\nheight formula=" + std::to_string(h.formula) +
                        " degeneration=" + std::to_string(h.degeneration) + "\n";
    human += "deletion sequence " + std::to_string(seq.size()) + " steps\n";
    for (const auto& s : seq) human += "  delete e" + std::to_string(s.edge_id) + "\n";
    emit(payload, g, human);
    return 0;
}

int run_chroma(const Graph& graph, const std::string& order_spec, bool partial, int search_budget,
               const GlobalOptions& g) {
    ChromaticCertificate cert =
        search_budget > 0
            ? order_search(graph, search_budget, g.seed)
            : chromatic_certificate(graph, resolve_order(graph, order_spec, partial));
    auto labels = graph.labels();
    auto shortcut = principal_shortcut(graph);

    json witness = json::object();
    json printed = json::array();
    for (std::size_t i = 0; i < cert.init_gens.size(); ++i) {
        std::string gen = cert.init_gens[i].str(labels);
        printed.push_back(gen);
        witness[gen] = labels.at(cert.witness[i]);
    }
    json cover = json::array();
    for (std::size_t slot : cert.cover) cover.push_back(labels.at(slot));
    json payload{{"command", "chroma"},
                 {"graph", graph_json(graph)},
                 {"order", cert.order.spec(labels)},
                 {"init_generators", printed},
                 {"cover", cover},
                 {"cover_is_minimum", cert.cover_is_minimum},
                 {"bound", cert.bound},
                 {"exact_chromatic_number", cert.exact_chi},
                 {"delta_plus_one", cert.delta_plus_one},
                 {"divisibility_witness", witness},
                 {"principal_shortcut", nullptr}};
    if (shortcut) payload["principal_shortcut"] = *shortcut;
    if (search_budget > 0) payload["search_budget"] = search_budget;

    std::string human = graph_line(graph) + "\n";
    if (search_budget > 0) human += "search budget " + std::to_string(search_budget) + "\n";
    human += "order " + cert.order.spec(labels) + "\n";
    human += "init generators " + std::to_string(cert.init_gens.size()) + "\n";
    for (std::size_t i = 0; i < cert.init_gens.size(); ++i)
        human += "  " + cert.init_gens[i].str(labels) + " covered by " +
                 labels.at(cert.witness[i]) + "\n";
    human += "cover {";
    for (std::size_t slot : cert.cover) human += " " + labels.at(slot);
    human += " } size " + std::to_string(cert.cover.size()) + " minimum " +
             (cert.cover_is_minimum ? "yes" : "no") + "\n";
    human += "bound " + std::to_string(cert.bound) + "\n";
    human += "exact chromatic number " + std::to_string(cert.exact_chi) + "\n";
    human += "delta plus one " + std::to_string(cert.delta_plus_one) + "\n";
    if (shortcut) human += "principal shortcut " + std::to_string(*shortcut) + "\n";
    emit(payload, g, human);
    return 0;
}

int run_graver(const Graph& graph, const GlobalOptions& g) {
    GraverOptions opts;
    opts.edge_cap = g.max_edges;
    auto basis = graver_basis(graph, opts);
    auto labels = graph.labels();
    json elements = json::array();
    std::string human = graph_line(graph) + "\ngraver basis " + std::to_string(basis.size()) +
                        " elements\n";
    for (const auto& w : basis) {
        auto shape = classify_primitive_subgraph(w, graph);
        std::string shape_str =
            shape == PrimitiveShape::even_cycle ? "even-cycle" : "two-odd-cycles";
        json walk = json::array();
        std::string walk_str;
        for (auto [id, mult] : w.walk_edges) {
            walk.push_back({"e" + std::to_string(id), mult});
            walk_str += " e" + std::to_string(id);
            if (mult > 1) walk_str += ":" + std::to_string(mult);
        }
        elements.push_back({{"binomial", w.binomial.str(labels)},
                            {"shape", shape_str},
                            {"walk_edges", walk}});
        human += "  " + w.binomial.str(labels) + " | " + shape_str + " |" + walk_str + "\n";
    }
    json payload{{"command", "graver"},
                 {"graph", graph_json(graph)},
                 {"count", basis.size()},
                 {"elements", elements}};
    emit(payload, g, human);
    return 0;
}

int run_verify_file(const Graph& graph, const GlobalOptions& g) {
    VerifyOptions opts;
    opts.seed = g.seed;
    auto results = verify_graph(graph, opts);
    bool ok = all_pass(results);
    json props = json::array();
    std::string human = graph_line(graph) + "\n";
    int failures = 0;
    for (const auto& r : results) {
        props.push_back({{"name", r.name},
                         {"pass", r.pass},
                         {"applicable", r.applicable},
                         {"detail", r.detail}});
        std::string status = !r.applicable ? "skip" : (r.pass ? "pass" : "FAIL");
        if (!r.pass) ++failures;
        human += "  " + r.name + std::string(r.name.size() < 36 ? 36 - r.name.size() : 1, ' ') +
                 status;
        if (!r.detail.empty()) human += " (" + r.detail + ")";
        human += "\n";
    }
    if (ok)
        human += "all " + std::to_string(results.size()) + " properties pass\n";
    else
        human += "FAILURES: " + std::to_string(failures) + " of " +
                 std::to_string(results.size()) + "\n";
    json payload{{"command", "verify"},
                 {"graph", graph_json(graph)},
                 {"properties", props},
                 {"all_pass", ok}};
    emit(payload, g, human);
    return ok ? 0 : 1;
}

int run_verify_exhaustive(int max_p, const GlobalOptions& g) {
    json levels = json::array();
    std::string human;
    bool ok = true;
    long long total = 0;
    for (int p = 1; p <= max_p; ++p) {
        auto graphs = connected_graphs(p);
        bool level_ok = true;
        for (const Graph& graph : graphs) {
            VerifyOptions opts;
            opts.seed = g.seed;
            if (!all_pass(verify_graph(graph, opts))) level_ok = false;
        }
        total += static_cast<long long>(graphs.size());
        log_line(1, "verified p=" + std::to_string(p) + " (" + std::to_string(graphs.size()) +
                        " classes)");
        levels.push_back({{"p", p}, {"classes", graphs.size()}, {"pass", level_ok}});
        human += "p=" + std::to_string(p) + " classes=" + std::to_string(graphs.size()) + " " +
                 (level_ok ? "pass" : "FAIL") + "\n";
        ok = ok && level_ok;
    }
    human += std::string(ok ? "all " : "FAILURES among ") + std::to_string(total) + " graphs" +
             (ok ? " pass" : "") + "\n";
    json payload{
        {"command", "verify"}, {"exhaustive", max_p}, {"levels", levels}, {"all_pass", ok}};
    emit(payload, g, human);
    return ok ? 0 : 1;
}

int run_export_m2(const Graph& graph, const GlobalOptions& g) {
    std::string script = export_m2(graph);
    json payload{{"command", "export-m2"}, {"graph", graph_json(graph)}, {"script", script}};
    emit(payload, g, script);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for toric ideals of finite simple graphs"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Seed for randomized searches")->capture_default_str();
    app.add_option("--max-edges", global.max_edges, "Reject graphs with more edges")
        ->capture_default_str();

    std::string file;
    std::string order_spec;
    bool partial = false;
    int edge_id = 0;
    int search_budget = 0;
    int exhaustive_p = 0;

    auto add_file = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("file", file, "Graph file");
        if (required) opt->required();
        sub->fallthrough();
        return sub;
    };
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", order_spec, "Monomial order spec");
        sub->add_flag("--partial", partial, "Complete a partial lex list by slot order");
        return sub;
    };

    auto* cmd_ideal = add_file(app.add_subcommand(
        "ideal", "Reduced basis of the toric ideal under the reference order"));
    auto* cmd_gb = add_order(
        add_file(app.add_subcommand("gb", "Reduced Groebner basis under a chosen order")));
    auto* cmd_init = add_order(
        add_file(app.add_subcommand("init", "Minimal generators of the initial ideal")));
    auto* cmd_kmy = add_order(add_file(
        app.add_subcommand("kmy", "Decomposition of the toric ideal at a chosen edge")));
    cmd_kmy->add_option("--edge", edge_id, "Distinguished edge id")->required();
    auto* cmd_height =
        add_file(app.add_subcommand("height", "Height, both formulas, plus a deletion sequence"));
    auto* cmd_chroma = add_order(
        add_file(app.add_subcommand("chroma", "Chromatic bound certificate from an initial ideal")));
    cmd_chroma->add_option("--search", search_budget,
                           "Search this many orders for the best bound");
    auto* cmd_graver =
        add_file(app.add_subcommand("graver", "Primitive binomials with walk structure"));
    auto* cmd_verify = add_file(
        app.add_subcommand("verify", "Run the property battery on one graph or exhaustively"),
        false);
    cmd_verify->add_option("--exhaustive", exhaustive_p,
                           "Check all connected graphs up to this vertex count");
    auto* cmd_export =
        add_file(app.add_subcommand("export-m2", "Macaulay2 cross-check script"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_ideal->parsed()) {
            Graph graph = load_graph(file, global);
            return run_basis_command("ideal", graph,
                                     reference_order(static_cast<std::size_t>(graph.q())),
                                     global);
        }
        if (cmd_gb->parsed()) {
            Graph graph = load_graph(file, global);
            return run_basis_command("gb", graph, resolve_order(graph, order_spec, partial),
                                     global);
        }
        if (cmd_init->parsed()) {
            Graph graph = load_graph(file, global);
            return run_init(graph, resolve_order(graph, order_spec, partial), global);
        }
        if (cmd_kmy->parsed())
            return run_kmy(load_graph(file, global), edge_id, order_spec, partial, global);
        if (cmd_height->parsed()) return run_height(load_graph(file, global), global);
        if (cmd_chroma->parsed())
            return run_chroma(load_graph(file, global), order_spec, partial, search_budget,
                              global);
        if (cmd_graver->parsed()) return run_graver(load_graph(file, global), global);
        if (cmd_verify->parsed()) {
            if (exhaustive_p > 0) return run_verify_exhaustive(exhaustive_p, global);
            if (file.empty())
                throw std::invalid_argument("verify needs a graph file or --exhaustive");
            return run_verify_file(load_graph(file, global), global);
        }
        if (cmd_export->parsed()) return run_export_m2(load_graph(file, global), global);
    } catch (const toricgraph::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
