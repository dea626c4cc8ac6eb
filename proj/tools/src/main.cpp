#include <kempe/coloring.hpp>
#include <kempe/dot.hpp>
#include <kempe/enumerate.hpp>
#include <kempe/errors.hpp>
#include <kempe/families.hpp>
#include <kempe/graph.hpp>
#include <kempe/recognize.hpp>
#include <kempe/trace_check.hpp>
#include <kempe/transform.hpp>
#include <kempe/vertex.hpp>
#include <kempe/witness.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using json = nlohmann::ordered_json;
using namespace kempe;

namespace {

struct run_config {
    std::uint64_t budget_nodes = budget::default_node_limit;
    std::size_t coloring_cap = default_coloring_cap;
    int jobs = 1;
    int seed = 0;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::string body = text;
    if (body.empty() || body.back() != '\n')
        body += '\n';
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out << body;
}

graph load_graph(const std::string& path) { return graph::from_json(slurp(path)); }

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw parse_error("bad integer list entry '" + item + "'");
        }
        if (pos != item.size())
            throw parse_error("bad integer list entry '" + item + "'");
        out.push_back(value);
    }
    if (out.empty())
        throw parse_error("empty integer list");
    return out;
}

// preorder child counts, root first
plane_tree tree_from_counts(const std::vector<int>& counts) {
    plane_tree t;
    t.children.resize(counts.size());
    std::vector<std::pair<int, int>> stack;
    int next = 1;
    stack.emplace_back(0, counts[0]);
    while (!stack.empty()) {
        auto& [node, left] = stack.back();
        if (left == 0) {
            stack.pop_back();
            continue;
        }
        --left;
        if (next >= static_cast<int>(counts.size()))
            throw parse_error("child counts end before the tree closes");
        int child = next++;
        t.children[node].push_back(child);
        stack.emplace_back(child, counts[child]);
    }
    if (next != static_cast<int>(counts.size()))
        throw parse_error("child counts leave unused entries");
    return t;
}

const char* verdict_name(aq_verdict v) {
    switch (v) {
    case aq_verdict::certified_by_class:
        return "certified_by_class";
    case aq_verdict::verified_by_brute_force:
        return "verified_by_brute_force";
    default:
        return "refuted_with_witness";
    }
}

json aq_to_json(const aq_membership& m) {
    json e;
    e["q"] = m.q;
    e["verdict"] = verdict_name(m.verdict);
    json blocks = json::array();
    for (const block_certificate& bc : m.blocks) {
        json be;
        be["edges"] = bc.block_edges;
        be["tag"] = bc.cert.tag;
        if (!bc.cert.a.empty())
            be["a"] = bc.cert.a;
        if (!bc.cert.b.empty())
            be["b"] = bc.cert.b;
        blocks.push_back(std::move(be));
    }
    e["blocks"] = std::move(blocks);
    e["witness"] = m.witness ? json::parse(m.witness->to_json()) : json(nullptr);
    return e;
}

void run_analyze(const run_config& cfg, const std::string& graph_path, const std::string& out,
                 const std::string& dot_out) {
    graph g = load_graph(graph_path);
    budget b(cfg.budget_nodes);

    json rep;
    rep["vertices"] = g.vertex_count();
    rep["edges"] = g.edge_count();
    rep["multigraph"] = g.multigraph();
    rep["max_degree"] = g.max_degree();
    chromatic_result cr = chromatic_index(g, b);
    rep["chi_prime"] = cr.chi_prime;
    rep["class"] = cr.chi_prime == g.max_degree() ? 1 : 2;
    int gi = girth(g);
    rep["girth"] = gi == girth_infinity ? json(nullptr) : json(gi);
    rep["degeneracy"] = degeneracy(g);

    block_decomposition bd = decompose_blocks(g);
    rep["blocks"] = bd.blocks;
    rep["cutvertices"] = bd.cutvertices;
    rep["isolated_vertices"] = bd.isolated_vertices;

    json rec;
    rec["bipartite"] = is_bipartite(g).bipartite;
    rec["chordless"] = is_chordless(g);
    rec["series_parallel"] = is_series_parallel(g).series_parallel;
    rec["planar"] = is_planar(g);
    std::optional<int> hub = is_wheel(g);
    rec["wheel_hub"] = hub ? json(*hub) : json(nullptr);
    rec["line_perfect_blocks"] = line_perfect_blocks(g);
    rep["recognizers"] = std::move(rec);

    json memberships = json::array();
    for (int q : {3, 4, 7}) {
        // each q gets its own budget so one hopeless case cannot sink the rest
        budget qb(cfg.budget_nodes);
        try {
            memberships.push_back(aq_to_json(in_A_q(g, q, qb)));
        } catch (const budget_exceeded& e) {
            memberships.push_back({{"q", q}, {"verdict", "inconclusive"}, {"reason", e.what()}});
        } catch (const cap_exceeded& e) {
            memberships.push_back({{"q", q}, {"verdict", "inconclusive"}, {"reason", e.what()}});
        }
    }
    rep["a_q"] = std::move(memberships);

    spill(out, rep.dump(2));
    if (!dot_out.empty())
        spill(dot_out, graph_dot(g));
}

void run_color(const run_config& cfg, const std::string& graph_path, int t,
               const std::vector<std::string>& swaps, const std::vector<std::string>& kempes,
               const std::string& out) {
    graph g = load_graph(graph_path);
    budget b(cfg.budget_nodes);
    if (t == 0)
        t = chromatic_index(g, b).chi_prime;
    std::optional<edge_coloring> f = find_proper_coloring_lex(g, t, b);
    if (!f)
        throw hypothesis_refuted("no proper coloring with " + std::to_string(t) + " colors");
    for (const std::string& s : swaps) {
        std::vector<int> cd = int_list(s);
        if (cd.size() != 2)
            throw parse_error("--swap wants two colors");
        for (const edge& e : g.edges()) {
            int c = f->color_of(g, e.id);
            if (c == cd[0])
                f->set_color(g, e.id, cd[1]);
            else if (c == cd[1])
                f->set_color(g, e.id, cd[0]);
        }
    }
    for (const std::string& s : kempes) {
        std::vector<int> vcd = int_list(s);
        if (vcd.size() != 3)
            throw parse_error("--kempe wants vertex,color,color");
        kempe_chain_t chain = kempe_chain(g, *f, vcd[0], vcd[1], vcd[2]);
        *f = kempe_interchange(g, *f, chain);
    }
    spill(out, coloring_to_json(g, *f));
}

void run_transform(const run_config& cfg, const std::string& graph_path, const std::string& f_path,
                   const std::string& goal_path, int q, bool unchecked, const std::string& out,
                   const std::string& diff_dot_out) {
    graph g = load_graph(graph_path);
    edge_coloring f = coloring_from_json(g, slurp(f_path));
    edge_coloring goal = coloring_from_json(g, slurp(goal_path));
    budget b(cfg.budget_nodes);

    if (!unchecked) {
        aq_membership m = in_A_q(g, q, b);
        if (m.verdict == aq_verdict::refuted_with_witness)
            throw hypothesis_refuted("graph falls outside the q=" + std::to_string(q)
                                     + " solvable class; pass --unchecked to try anyway");
    }
    if (!diff_dot_out.empty())
        spill(diff_dot_out, difference_dot(g, f, goal));

    transformation_trace tr = transform(g, f, goal, q, b);
    spill(out, trace_to_json(g, tr));
}

int run_verify(const std::string& graph_path, const std::string& trace_path, int width,
               const std::string& out) {
    graph g = load_graph(graph_path);
    transformation_trace tr = trace_from_json(g, slurp(trace_path));
    trace_check_report r = check_trace(g, tr);
    if (r.ok && width > 0 && tr.width > width) {
        r.ok = false;
        r.reason = "declared width " + std::to_string(tr.width) + " exceeds the requested bound "
                   + std::to_string(width);
    }
    json rep;
    rep["ok"] = r.ok;
    rep["steps"] = tr.steps.size();
    rep["width"] = tr.width;
    rep["reason"] = r.ok ? json(nullptr) : json(r.reason);
    spill(out, rep.dump(2));
    return r.ok ? 0 : 1;
}

void run_index(const run_config& cfg, const std::string& graph_path, const std::string& out,
               int meta_n, const std::string& meta_dot_out) {
    graph g = load_graph(graph_path);
    budget b(cfg.budget_nodes);
    index_report r = chi_trans_exact(g, b, cfg.coloring_cap);
    spill(out, r.to_json());
    if (!meta_dot_out.empty())
        spill(meta_dot_out, adjacency_dot(g, meta_n, b, cfg.coloring_cap));
}

void run_witness(const run_config& cfg, const std::string& klass, int index, int max_vertices,
                 const std::string& out, const std::string& dot_out) {
    budget b(cfg.budget_nodes);
    witness_result w;
    if (klass == "halin") {
        if (index != 4)
            throw parse_error("halin witnesses are searched at index 4");
        w = find_halin_index4(max_vertices, b);
    } else if (klass == "outerplanar") {
        if (index != 4)
            throw parse_error("outerplanar witnesses are searched at index 4");
        w = find_outerplanar_index4(max_vertices, b);
    } else {
        if (index != 3)
            throw parse_error("planar-bipartite witnesses are searched at index 3");
        w = find_planar_bipartite_kempe3(max_vertices, b);
    }
    json rep;
    rep["graph"] = json::parse(w.g.to_json());
    rep["report"] = json::parse(w.report.to_json());
    rep["candidates_tried"] = w.candidates_tried;
    spill(out, rep.dump(2));
    if (!dot_out.empty())
        spill(dot_out, graph_dot(w.g));
}

void run_vertex_index(const run_config& cfg, const std::string& graph_path, int k,
                      const std::string& out) {
    graph g = load_graph(graph_path);
    budget b(cfg.budget_nodes);
    vertex_chromatic_result cr = chromatic_number(g, b);
    if (k == 0)
        k = cr.chi;
    auto parts = enumerate_partitions(g, k, b, cfg.coloring_cap);

    json rep;
    rep["chi"] = cr.chi;
    rep["chi_witness"] = json::parse(cr.witness.to_json());
    rep["k"] = k;
    rep["partition_count"] = parts.size();
    json arr = json::array();
    for (const vertex_partition& p : parts)
        arr.push_back(json::parse(p.to_json()));
    rep["partitions"] = std::move(arr);
    rep["global_transformation_required"] =
        parts.size() == 2 ? json(global_transformation_required(g, k, b)) : json(nullptr);
    spill(out, rep.dump(2));
}

struct construct_io {
    std::string out;
    std::string dot_out;
};

void emit_graph(const graph& g, const construct_io& io) {
    spill(io.out, g.to_json());
    if (!io.dot_out.empty())
        spill(io.dot_out, graph_dot(g));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper edge coloring toolkit: analysis, rewrites, exact indices"};
    app.require_subcommand(1);

    run_config cfg;
    app.add_option("--budget-nodes", cfg.budget_nodes, "search node budget per command")
        ->capture_default_str();
    app.add_option("--coloring-cap", cfg.coloring_cap, "cap on enumerated colorings or partitions")
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs,
                   "worker threads for enumeration loops; currently every loop runs on one thread")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed,
                   "seed reserved for randomized corpus generation; no subcommand draws "
                   "randomness today")
        ->capture_default_str();

    int rc = 0;

    auto* analyze = app.add_subcommand("analyze", "degree, chromatic index, blocks, recognizers");
    analyze->fallthrough();
    {
        static std::string graph_path, out, dot_out;
        analyze->add_option("graph", graph_path, "graph json file, - for stdin")->required();
        analyze->add_option("-o,--out", out, "report destination, stdout by default");
        analyze->add_option("--dot", dot_out, "write the graph as dot");
        analyze->callback([&] { run_analyze(cfg, graph_path, out, dot_out); });
    }

    auto* color = app.add_subcommand("color", "find a proper coloring, then rewrite it");
    color->fallthrough();
    {
        static std::string graph_path, out;
        static int t = 0;
        static std::vector<std::string> swaps, kempes;
        color->add_option("graph", graph_path, "graph json file, - for stdin")->required();
        color->add_option("--t", t, "palette size, 0 means the chromatic index");
        color->add_option("--swap", swaps, "exchange two whole classes, as c,d; repeatable");
        color->add_option("--kempe", kempes,
                          "interchange the two colored chain through a vertex, as v,c,d; "
                          "swaps run first, then these, in flag order");
        color->add_option("-o,--out", out, "coloring destination, stdout by default");
        color->callback([&] { run_color(cfg, graph_path, t, swaps, kempes, out); });
    }

    auto* transform_cmd = app.add_subcommand("transform", "rewrite one coloring into another");
    transform_cmd->fallthrough();
    {
        static std::string graph_path, f_path, goal_path, out, diff_dot;
        static int q = 3;
        static bool unchecked = false;
        transform_cmd->add_option("graph", graph_path, "graph json file")->required();
        transform_cmd->add_option("from", f_path, "starting coloring json")->required();
        transform_cmd->add_option("to", goal_path, "goal coloring json")->required();
        transform_cmd->add_option("--q", q, "width parameter; steps change at most q+1 classes")
            ->capture_default_str();
        transform_cmd->add_flag("--unchecked", unchecked,
                                "skip the solvable class membership check");
        transform_cmd->add_option("-o,--out", out, "trace destination, stdout by default");
        transform_cmd->add_option("--diff-dot", diff_dot,
                                  "write the difference subgraph of the pair as dot");
        transform_cmd->callback(
            [&] { run_transform(cfg, graph_path, f_path, goal_path, q, unchecked, out, diff_dot); });
    }

    auto* verify = app.add_subcommand("verify", "revalidate a trace from scratch");
    verify->fallthrough();
    {
        static std::string graph_path, trace_path, out;
        static int width = 0;
        verify->add_option("graph", graph_path, "graph json file")->required();
        verify->add_option("trace", trace_path, "trace json file")->required();
        verify->add_option("--width", width, "reject traces declared wider than this");
        verify->add_option("-o,--out", out, "report destination, stdout by default");
        verify->callback([&] { rc = run_verify(graph_path, trace_path, width, out); });
    }

    auto* index = app.add_subcommand("index", "exact transformation index by full enumeration");
    index->fallthrough();
    {
        static std::string graph_path, out, meta_dot;
        static int meta_n = 2;
        index->add_option("graph", graph_path, "graph json file")->required();
        index->add_option("-o,--out", out, "report destination, stdout by default");
        index->add_option("--meta-dot", meta_dot, "write the coloring adjacency graph as dot");
        index->add_option("--meta-n", meta_n, "width used for the adjacency dot")
            ->capture_default_str();
        index->callback([&] { run_index(cfg, graph_path, out, meta_n, meta_dot); });
    }

    auto* witness = app.add_subcommand("witness", "search a family for a sharpness witness");
    witness->fallthrough();
    {
        static std::string klass, out, dot_out;
        static int index_target = 4;
        static int max_vertices = 12;
        witness->add_option("--class", klass, "halin, outerplanar, or planar-bipartite")
            ->required()
            ->check(CLI::IsMember({"halin", "outerplanar", "planar-bipartite"}));
        witness->add_option("--index", index_target, "target transformation index")
            ->capture_default_str();
        witness->add_option("--max-vertices", max_vertices, "candidate size limit")
            ->capture_default_str();
        witness->add_option("-o,--out", out, "report destination, stdout by default");
        witness->add_option("--dot", dot_out, "write the witness graph as dot");
        witness->callback([&] { run_witness(cfg, klass, index_target, max_vertices, out, dot_out); });
    }

    auto* vertex_index = app.add_subcommand("vertex-index", "vertex partitions and rigidity");
    vertex_index->fallthrough();
    {
        static std::string graph_path, out;
        static int k = 0;
        vertex_index->add_option("graph", graph_path, "graph json file")->required();
        vertex_index->add_option("--k", k, "class count, 0 means the chromatic number");
        vertex_index->add_option("-o,--out", out, "report destination, stdout by default");
        vertex_index->callback([&] { run_vertex_index(cfg, graph_path, k, out); });
    }

    auto* construct = app.add_subcommand("construct", "emit a graph from a named family");
    construct->require_subcommand(1);
    construct->fallthrough();
    {
        static construct_io io;
        static int wheel_n = 5;
        auto* sub = construct->add_subcommand("wheel", "rim cycle plus a hub");
        sub->fallthrough();
        sub->add_option("--n", wheel_n, "rim length")->required();
        sub->add_option("-o,--out", io.out, "graph destination, stdout by default");
        sub->add_option("--dot", io.dot_out, "write the graph as dot");
        sub->callback([&] { emit_graph(wheel(wheel_n), io); });

        static construct_io halin_io;
        static std::string children;
        auto* hal = construct->add_subcommand("halin", "plane tree plus its leaf cycle");
        hal->fallthrough();
        hal->add_option("--children", children,
                        "preorder child counts, comma separated, root first")
            ->required();
        hal->add_option("-o,--out", halin_io.out, "graph destination, stdout by default");
        hal->add_option("--dot", halin_io.dot_out, "write the graph as dot");
        hal->callback(
            [&] { emit_graph(halin(tree_from_counts(int_list(children))).g, halin_io); });

        static construct_io hpn_io;
        static int p = 1, n = 3;
        static bool complement_flag = false;
        auto* hpn = construct->add_subcommand("hpn", "ring of overlapping cliques");
        hpn->fallthrough();
        hpn->add_option("--p", p, "group size")->required();
        hpn->add_option("--n", n, "half the group count")->required();
        hpn->add_flag("--complement", complement_flag, "emit the complement instead");
        hpn->add_option("-o,--out", hpn_io.out, "graph destination, stdout by default");
        hpn->add_option("--dot", hpn_io.dot_out, "write the graph as dot");
        hpn->callback([&] {
            graph g = clique_ring(p, n);
            emit_graph(complement_flag ? complement(g) : g, hpn_io);
        });

        static construct_io grid_io;
        static int rows = 2, cols = 2;
        auto* gr = construct->add_subcommand("grid", "row by column lattice");
        gr->fallthrough();
        gr->add_option("--rows", rows)->required();
        gr->add_option("--cols", cols)->required();
        gr->add_option("-o,--out", grid_io.out, "graph destination, stdout by default");
        gr->add_option("--dot", grid_io.dot_out, "write the graph as dot");
        gr->callback([&] { emit_graph(grid(rows, cols), grid_io); });

        static construct_io glued_io;
        static int grows = 2, gcols = 3;
        static std::string witness_path;
        auto* gl = construct->add_subcommand("glued", "grid block sharing a cutvertex with "
                                                      "another block");
        gl->fallthrough();
        gl->add_option("--rows", grows)->required();
        gl->add_option("--cols", gcols)->required();
        gl->add_option("--witness", witness_path, "graph json for the second block")->required();
        gl->add_option("-o,--out", glued_io.out, "graph destination, stdout by default");
        gl->add_option("--dot", glued_io.dot_out, "write the graph as dot");
        gl->callback(
            [&] { emit_graph(glued_family(grows, gcols, load_graph(witness_path)), glued_io); });

        static construct_io gadget_io;
        static std::string gadget_graph, map_out;
        static int gadget_t = 0;
        auto* ga = construct->add_subcommand("gadget", "pendant forcing expansion of a graph");
        ga->fallthrough();
        ga->add_option("--graph", gadget_graph, "source graph json")->required();
        ga->add_option("--t", gadget_t, "palette size, 0 means the chromatic index");
        ga->add_option("--map", map_out, "also write the block layout json here");
        ga->add_option("-o,--out", gadget_io.out, "graph destination, stdout by default");
        ga->add_option("--dot", gadget_io.dot_out, "write the graph as dot");
        ga->callback([&] {
            graph g = load_graph(gadget_graph);
            budget b(cfg.budget_nodes);
            gadget_result r =
                gadget_t > 0 ? build_pendant_gadget(g, gadget_t) : build_pendant_gadget(g, b);
            emit_graph(r.expanded, gadget_io);
            if (!map_out.empty())
                spill(map_out, r.map.to_json());
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const hypothesis_refuted& e) {
        std::cerr << "refuted: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
