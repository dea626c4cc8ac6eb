#include "kempe/dot.hpp"

#include "kempe/enumerate.hpp"

#include <sstream>

namespace kempe {

std::string graph_dot(const graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v : g.vertices())
        out << "  " << v << ";\n";
    for (const edge& e : g.edges())
        out << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string difference_dot(const graph& g, const edge_coloring& f, const edge_coloring& h) {
    difference_graph_t d = difference_graph(g, f, h);
    std::ostringstream out;
    out << "graph diff {\n";
    out << "  label=\"top color " << d.t << "\";\n";
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const difference_component& comp = d.components[i];
        const char* shape = comp.shape == component_shape::cycle      ? "cycle"
                            : comp.shape == component_shape::path_odd ? "odd path"
                                                                      : "even path";
        out << "  subgraph cluster_" << i << " {\n";
        out << "    label=\"" << shape << "\";\n";
        for (int id : comp.edge_ids) {
            const edge& e = g.edge_by_id(id);
            out << "    " << e.u << " -- " << e.v << " [label=\"e" << id << " "
                << f.color_of(g, id) << "/" << h.color_of(g, id) << "\"];\n";
        }
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

std::string adjacency_dot(const graph& g, int n, budget& b, std::size_t cap) {
    const int t = chromatic_index(g, b).chi_prime;
    auto colorings = enumerate_colorings(g, t, b, cap);
    std::ostringstream out;
    out << "graph meta {\n";
    out << "  label=\"width " << n << " over " << colorings.size() << " colorings\";\n";
    for (std::size_t i = 0; i < colorings.size(); ++i)
        out << "  c" << i << ";\n";
    for (std::size_t i = 0; i < colorings.size(); ++i)
        for (std::size_t j = i + 1; j < colorings.size(); ++j) {
            b.tick();
            if (class_difference(g, colorings[i], colorings[j]).size()
                <= static_cast<std::size_t>(n))
                out << "  c" << i << " -- c" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace kempe
